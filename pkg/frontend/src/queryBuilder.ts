/** Compile facet checkbox state into query text.

Rules: values inside one dimension are alternatives (disjunction), dimensions
combine conjunctively, a year range becomes comparison atoms, and the empty
selection is just "Tool". Facet values arrive from /api/facets already carrying
their query identifiers, so no naming logic lives here.
*/

export interface FacetSelection {
  aspect: string[];
  medium: string[];
  technique: string[];
  environment: string[];
  evaluation: string[];
  keywords: string[];
  yearMin?: number | null;
  yearMax?: number | null;
}

export const EMPTY_SELECTION: FacetSelection = {
  aspect: [],
  medium: [],
  technique: [],
  environment: [],
  evaluation: [],
  keywords: [],
  yearMin: null,
  yearMax: null,
};

const DIMENSION_PROPERTY: [keyof FacetSelection, string][] = [
  ["aspect", "aspectIs"],
  ["medium", "hasMedium"],
  ["technique", "usesTechnique"],
  ["environment", "runsIn"],
  ["evaluation", "evaluatedBy"],
  ["keywords", "addressesConcernKeyword"],
];

export function compileSelection(selection: FacetSelection): string {
  const conjuncts: string[] = ["Tool"];
  for (const [dimension, property] of DIMENSION_PROPERTY) {
    const values = selection[dimension] as string[];
    if (!values || values.length === 0) continue;
    const atoms = values.map((slug) => `${property} value ${slug}`);
    conjuncts.push(atoms.length === 1 ? atoms[0]! : `(${atoms.join(" or ")})`);
  }
  if (selection.yearMin != null) {
    conjuncts.push(`lastUpdate >= ${selection.yearMin}`);
  }
  if (selection.yearMax != null) {
    conjuncts.push(`lastUpdate <= ${selection.yearMax}`);
  }
  return conjuncts.join(" and ");
}
