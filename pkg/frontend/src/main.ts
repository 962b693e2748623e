import { ApiClient, ApiError } from "./api.js";
import { compileSelection, EMPTY_SELECTION, FacetSelection } from "./queryBuilder.js";
import { renderGraph } from "./graphView.js";
import { initialState, QueryRunner } from "./state.js";
import type { FacetInventory, QueryResponse, ToolRow } from "./types.js";

const CHECKBOX_DIMENSIONS: {
  key: keyof FacetSelection;
  dimension: string;
  title: string;
  limit?: number;
}[] = [
  { key: "aspect", dimension: "aspect", title: "Aspect" },
  { key: "medium", dimension: "medium", title: "Medium" },
  { key: "technique", dimension: "technique", title: "Technique" },
  { key: "environment", dimension: "environment", title: "Environment" },
  { key: "evaluation", dimension: "evaluation", title: "Evaluation" },
  { key: "keywords", dimension: "concern_keyword", title: "Concern keywords", limit: 24 },
];

function element<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? "http://127.0.0.1:8470";
}

const api = new ApiClient(apiBase());
const runner = new QueryRunner(api);
const state = initialState();
const selection: FacetSelection = structuredClone(EMPTY_SELECTION);

const facetPanel = document.getElementById("facets")!;
const queryBox = document.getElementById("query") as HTMLTextAreaElement;
const runButton = document.getElementById("run") as HTMLButtonElement;
const errorBanner = document.getElementById("error")!;
const resultsBody = document.getElementById("results")!;
const resultsMeta = document.getElementById("results-meta")!;
const detailPane = document.getElementById("detail")!;
const graphPane = document.getElementById("graph")!;
const graphRootInput = document.getElementById("graph-root") as HTMLInputElement;
const graphDepthInput = document.getElementById("graph-depth") as HTMLInputElement;
const graphButton = document.getElementById("graph-run") as HTMLButtonElement;

function showError(message: string, position?: number): void {
  errorBanner.replaceChildren();
  errorBanner.classList.remove("hidden");
  errorBanner.appendChild(element("div", undefined, message));
  if (position !== undefined) {
    const pre = element("pre");
    pre.textContent = `${state.queryText}\n${" ".repeat(position)}^`;
    errorBanner.appendChild(pre);
  }
}

function clearError(): void {
  errorBanner.classList.add("hidden");
  errorBanner.replaceChildren();
}

function renderResults(response: QueryResponse): void {
  resultsMeta.textContent =
    `${response.count} of ${response.universe_size} tools — ${response.query}`;
  resultsBody.replaceChildren();
  for (const row of response.matches) {
    resultsBody.appendChild(resultRow(row));
  }
}

function resultRow(row: ToolRow): HTMLTableRowElement {
  const tr = element("tr");
  const name = element("td");
  if (row.url) {
    const link = element("a", undefined, row.name) as HTMLAnchorElement;
    link.href = row.url;
    link.target = "_blank";
    link.rel = "noreferrer";
    name.appendChild(link);
  } else {
    name.textContent = row.name;
  }
  tr.appendChild(name);
  tr.appendChild(element("td", undefined, row.year?.toString() ?? ""));
  tr.appendChild(element("td", undefined, row.aspect ?? ""));
  tr.appendChild(element("td", undefined, (row.media ?? []).join("/")));
  tr.addEventListener("click", () => void showDetail(row.slug));
  return tr;
}

async function showDetail(slug: string): Promise<void> {
  try {
    const tool = await api.tool(slug);
    state.selectedTool = tool;
    detailPane.replaceChildren(
      element("h3", undefined, tool.name),
      element("p", undefined, tool.concern),
      definition("Aspect", tool.aspect),
      definition("Last update", String(tool.year)),
      definition("Environments", tool.environments.join(", ")),
      definition("Techniques", tool.techniques.join(", ")),
      definition("Media", tool.media.join(", ")),
      definition("Evaluations", tool.evaluations.join(", ")),
      definition("License", tool.license ?? "unknown"),
    );
    const link = element("a", undefined, tool.url) as HTMLAnchorElement;
    link.href = tool.url;
    link.target = "_blank";
    link.rel = "noreferrer";
    detailPane.appendChild(link);
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      detailPane.replaceChildren(element("p", undefined, `${slug} is not a tool`));
    }
  }
}

function definition(term: string, value: string): HTMLElement {
  const row = element("div", "def");
  row.appendChild(element("span", "def-term", term));
  row.appendChild(element("span", undefined, value));
  return row;
}

async function runQuery(text: string): Promise<void> {
  state.queryText = text;
  try {
    const response = await runner.run(text);
    if (response === null) return; // superseded by a newer query
    clearError();
    state.results = response;
    state.resultQuery = response.query;
    renderResults(response);
  } catch (error) {
    if (error instanceof ApiError) {
      showError(error.message, error.position);
    } else {
      showError(`service unreachable: ${String(error)}`);
    }
  }
}

function applySelection(): void {
  const text = compileSelection(selection);
  queryBox.value = text;
  void runQuery(text);
}

function checkboxGroup(
  title: string,
  key: keyof FacetSelection,
  entries: { value: string; slug: string; count: number }[],
): HTMLElement {
  const group = element("div", "group");
  group.appendChild(element("h4", undefined, title));
  for (const entry of entries) {
    const label = element("label", "option");
    const box = element("input") as HTMLInputElement;
    box.type = "checkbox";
    box.addEventListener("change", () => {
      const values = selection[key] as string[];
      if (box.checked) values.push(entry.slug);
      else values.splice(values.indexOf(entry.slug), 1);
      applySelection();
    });
    label.appendChild(box);
    label.appendChild(element("span", undefined, `${entry.value} (${entry.count})`));
    group.appendChild(label);
  }
  return group;
}

function yearGroup(years: { value: string }[]): HTMLElement {
  const group = element("div", "group");
  group.appendChild(element("h4", undefined, "Last update"));
  const values = years.map((y) => Number(y.value)).filter((y) => !Number.isNaN(y));
  const min = Math.min(...values);
  const max = Math.max(...values);
  for (const [label, apply] of [
    ["from", (year: number | null) => (selection.yearMin = year)],
    ["to", (year: number | null) => (selection.yearMax = year)],
  ] as const) {
    const row = element("label", "option");
    row.appendChild(element("span", undefined, label));
    const input = element("input") as HTMLInputElement;
    input.type = "number";
    input.min = String(min);
    input.max = String(max);
    input.placeholder = label === "from" ? String(min) : String(max);
    input.addEventListener("change", () => {
      apply(input.value === "" ? null : Number(input.value));
      applySelection();
    });
    row.appendChild(input);
    group.appendChild(row);
  }
  return group;
}

function renderFacets(inventory: FacetInventory): void {
  facetPanel.replaceChildren();
  for (const { key, dimension, title, limit } of CHECKBOX_DIMENSIONS) {
    const entries = (inventory[dimension] ?? []).slice(0, limit);
    facetPanel.appendChild(checkboxGroup(title, key, entries));
  }
  facetPanel.appendChild(yearGroup(inventory["year"] ?? []));
}

async function drawGraph(): Promise<void> {
  state.graphRoot = graphRootInput.value.trim() || "thing";
  state.graphDepth = Number(graphDepthInput.value) || 1;
  try {
    const graph = await api.graph(state.graphRoot, state.graphDepth);
    renderGraph(graphPane, graph, {
      seed: 70,
      onIndividualClick: (slug) => void showDetail(slug),
    });
    clearError();
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      graphPane.replaceChildren(
        element("p", "hint", `unknown root class: ${state.graphRoot}`),
      );
    } else {
      showError(String(error));
    }
  }
}

async function boot(): Promise<void> {
  runButton.addEventListener("click", () => void runQuery(queryBox.value));
  queryBox.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && (event.ctrlKey || event.metaKey)) {
      void runQuery(queryBox.value);
    }
  });
  graphButton.addEventListener("click", () => void drawGraph());
  try {
    renderFacets(await api.facets());
    queryBox.value = "Tool";
    await runQuery("Tool");
    await drawGraph();
  } catch (error) {
    showError(`cannot reach the vison API at ${apiBase()} — ${String(error)}`);
  }
}

void boot();
