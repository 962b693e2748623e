import { layoutGraph } from "./force.js";
import type { GraphResponse } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

// subclass edges blue, instance edges violet, property edges muted gray
const EDGE_COLOR: Record<string, string> = {
  subclass: "#2b6cb0",
  instance: "#8b5cf6",
  property: "#5b6478",
};

export interface GraphViewOptions {
  width?: number;
  height?: number;
  seed?: number;
  onIndividualClick?: (slug: string) => void;
}

/** Render a concept-graph export as SVG with a seeded deterministic layout. */
export function renderGraph(
  container: HTMLElement,
  graph: GraphResponse,
  options: GraphViewOptions = {},
): void {
  const width = options.width ?? 860;
  const height = options.height ?? 560;
  const seed = options.seed ?? 70;

  const positions = layoutGraph(
    graph.nodes.map((n) => n.id),
    graph.edges.map((e) => [e.from, e.to] as [string, string]),
    { width, height, seed },
  );

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "graph-canvas");

  for (const edge of graph.edges) {
    const from = positions.get(edge.from);
    const to = positions.get(edge.to);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", from.x.toFixed(1));
    line.setAttribute("y1", from.y.toFixed(1));
    line.setAttribute("x2", to.x.toFixed(1));
    line.setAttribute("y2", to.y.toFixed(1));
    line.setAttribute("stroke", EDGE_COLOR[edge.kind] ?? "#888");
    line.setAttribute("stroke-width", edge.kind === "property" ? "1" : "1.6");
    if (edge.kind === "property") line.setAttribute("stroke-dasharray", "3 3");
    svg.appendChild(line);
  }

  for (const node of graph.nodes) {
    const at = positions.get(node.id);
    if (!at) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("transform", `translate(${at.x.toFixed(1)},${at.y.toFixed(1)})`);

    if (node.kind === "class") {
      const box = document.createElementNS(SVG_NS, "rect");
      box.setAttribute("x", "-9");
      box.setAttribute("y", "-9");
      box.setAttribute("width", "18");
      box.setAttribute("height", "18");
      box.setAttribute("rx", "4");
      box.setAttribute("fill", "#2b6cb0");
      group.appendChild(box);
    } else {
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("r", "7");
      dot.setAttribute("fill", "#8b5cf6");
      group.appendChild(dot);
      group.setAttribute("class", "graph-individual");
      group.addEventListener("click", () => {
        options.onIndividualClick?.(node.id.replace(/^ind:/, ""));
      });
    }

    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", "11");
    text.setAttribute("y", "4");
    text.textContent = node.label;
    group.appendChild(text);
    svg.appendChild(group);
  }

  container.replaceChildren(svg);
}
