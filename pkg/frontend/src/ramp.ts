/** Red (low) to yellow (high); only the green channel moves. */
export function rampColor(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const g = Math.round(255 * clamped)
    .toString(16)
    .padStart(2, "0");
  return `#ff${g}00`;
}

/** Position of p inside [lo, hi]; a degenerate domain pins mid-ramp. */
export function rampPosition(p: number, lo: number, hi: number): number {
  if (hi <= lo) return 0.5;
  return (p - lo) / (hi - lo);
}
