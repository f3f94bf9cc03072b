/** Move one element of a list to a new position, returning a fresh array.
 * The element at `from` ends up at index `to`; everything else keeps its
 * relative order. Out-of-range indexes return an unchanged copy. */
export function moveItem<T>(list: readonly T[], from: number, to: number): T[] {
  const result = [...list];
  if (
    from === to ||
    from < 0 ||
    to < 0 ||
    from >= result.length ||
    to >= result.length
  ) {
    return result;
  }
  const moved = result.splice(from, 1);
  result.splice(to, 0, ...moved);
  return result;
}
