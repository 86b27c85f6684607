// Stable community colors: one distinct hue per rank.

const PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
  "#86bcb6",
  "#d37295",
];

export function colorForCommunity(rank: number): string {
  if (rank >= 1 && rank <= PALETTE.length) {
    return PALETTE[rank - 1]!;
  }
  // spread later ranks around the hue wheel, golden-angle spaced
  const hue = Math.round((rank * 137.508) % 360);
  return `hsl(${hue} 60% 55%)`;
}

export const UNASSIGNED_COLOR = "#cccccc";
