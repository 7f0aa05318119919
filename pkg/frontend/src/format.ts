/** Display formatting. Numbers show 4 significant figures; the value is
 * always the service's own, only rounded for the screen. */

import type { Ratio } from "./types.js";

export const SIG_FIGURES = 4;

export function formatSig(x: number, digits: number = SIG_FIGURES): string {
  if (!Number.isFinite(x)) return x > 0 ? "infinite" : "-infinite";
  if (x === 0) return "0";
  const precise = x.toPrecision(digits);
  // drop trailing zeros ("100.0" -> "100") without changing the value
  return precise.includes("e") ? precise : String(Number(precise));
}

export function formatPercent(p: number, digits: number = SIG_FIGURES): string {
  return `${formatSig(p * 100, digits)}%`;
}

export function formatRatio(value: Ratio, digits: number = SIG_FIGURES): string {
  if (value === null) return "n/a";
  if (value === "INFINITE") return "infinite";
  return formatSig(value, digits);
}

export const CLASS_BADGES: Record<string, string> = {
  FAVOURS_HP: "supports prosecution",
  FAVOURS_HD: "supports defence",
  NEUTRAL: "neutral",
};
