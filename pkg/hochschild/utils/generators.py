from typing import Iterator, Sequence, Tuple


def compositions_generator(total: int, minimums: Sequence[int], maximum: int) -> Iterator[Tuple[int, ...]]:
    """
    Generate all tuples (i_1, ..., i_k) with sum `total`, i_j >= minimums[j] and i_j <= maximum,
    in lexicographic order.
    """
    if not minimums:
        if total == 0:
            yield ()
        return
    head_min = minimums[0]
    rest = minimums[1:]
    rest_min = sum(rest)
    rest_max = maximum * len(rest)
    for head in range(head_min, maximum + 1):
        remaining = total - head
        if remaining < rest_min:
            break
        if remaining > rest_max:
            continue
        for tail in compositions_generator(remaining, rest, maximum):
            yield (head,) + tail


def tuples_generator(base: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Generate all tuples in range(base)^length, leftmost slowest."""
    if length == 0:
        yield ()
        return
    for head in range(base):
        for tail in tuples_generator(base, length - 1):
            yield (head,) + tail
