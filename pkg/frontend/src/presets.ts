// Bundled demo graphs in the service's edge-list format: every elementary
// graph plus two composite cacti.

function cycleText(k: number): string {
  const lines = [`${k} ${k}`];
  for (let i = 0; i + 1 < k; i++) lines.push(`${i} ${i + 1}`);
  lines.push(`0 ${k - 1}`);
  return lines.join("\n") + "\n";
}

export const PRESETS: Record<string, string> = {
  C3: cycleText(3),
  C4: cycleText(4),
  C5: cycleText(5),
  C6: cycleText(6),
  C7: cycleText(7),
  C8: cycleText(8),
  C9: cycleText(9),
  "path-4": "4 3\n0 1\n1 2\n2 3\n",
  bull: "5 5\n0 1\n0 2\n1 2\n1 3\n2 4\n",
  "3-pan": "4 4\n0 1\n0 2\n1 2\n1 3\n",
  "twin triangles": "6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n",
  "cactus garden":
    "13 14\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n5 6\n6 7\n7 8\n8 9\n5 9\n2 10\n10 11\n10 12\n",
};
