/** Payload shapes of the discovery API (all fields snake_case on the wire). */

export interface ToolRow {
  slug: string;
  name: string;
  year?: number;
  aspect?: string;
  media?: string[];
  url?: string;
}

export interface QueryResponse {
  query: string;
  universe_size: number;
  count: number;
  matches: ToolRow[];
}

export interface ToolDetail {
  slug: string;
  name: string;
  aspect: string;
  year: number;
  concern: string;
  concern_keywords: string[];
  environments: string[];
  techniques: string[];
  media: string[];
  evaluations: string[];
  url: string;
  license: string | null;
}

export interface FacetEntry {
  value: string;
  slug: string;
  count: number;
}

export type FacetInventory = Record<string, FacetEntry[]>;

export interface GraphNode {
  id: string; // "class:tool" | "ind:gzoltar"
  label: string;
  kind: "class" | "individual";
}

export interface GraphEdge {
  from: string;
  to: string;
  kind: "subclass" | "instance" | "property";
}

export interface GraphResponse {
  root: string;
  depth: number;
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface ApiErrorBody {
  error: string;
  code: string;
  position?: number;
}
