/** Deterministic left-to-right layered DAG layout.
 *
 * A node's layer is its longest path from any root; within a layer,
 * declaration order decides the row. The same model always produces the
 * same picture.
 */

export interface LayoutInput {
  id: string;
  parents: string[];
}

export interface PositionedNode {
  id: string;
  layer: number;
  row: number;
  x: number;
  y: number;
}

export interface GraphLayout {
  nodes: Map<string, PositionedNode>;
  layers: string[][];
  width: number;
  height: number;
}

export const COLUMN_GAP = 190;
export const ROW_GAP = 120;
export const MARGIN = 60;

export function layeredLayout(inputs: LayoutInput[]): GraphLayout {
  const depth = new Map<string, number>();
  const byId = new Map(inputs.map((n) => [n.id, n]));

  const layerOf = (id: string, trail: Set<string>): number => {
    const known = depth.get(id);
    if (known !== undefined) return known;
    if (trail.has(id)) return 0; // defensive; validated models are acyclic
    trail.add(id);
    const node = byId.get(id);
    const parents = node ? node.parents.filter((p) => byId.has(p)) : [];
    const layer = parents.length
      ? 1 + Math.max(...parents.map((p) => layerOf(p, trail)))
      : 0;
    trail.delete(id);
    depth.set(id, layer);
    return layer;
  };

  for (const node of inputs) layerOf(node.id, new Set());

  const layerCount = inputs.length ? Math.max(...depth.values()) + 1 : 0;
  const layers: string[][] = Array.from({ length: layerCount }, () => []);
  for (const node of inputs) layers[depth.get(node.id)!].push(node.id);

  const maxRows = Math.max(1, ...layers.map((l) => l.length));
  const nodes = new Map<string, PositionedNode>();
  layers.forEach((ids, layer) => {
    const offset = ((maxRows - ids.length) * ROW_GAP) / 2;
    ids.forEach((id, row) => {
      nodes.set(id, {
        id,
        layer,
        row,
        x: MARGIN + layer * COLUMN_GAP,
        y: MARGIN + offset + row * ROW_GAP,
      });
    });
  });

  return {
    nodes,
    layers,
    width: MARGIN * 2 + Math.max(0, layerCount - 1) * COLUMN_GAP + 130,
    height: MARGIN * 2 + (maxRows - 1) * ROW_GAP + 60,
  };
}
