"""Permutations grouped by the multiset of their Lehmer code letters.

Two permutations are L-equivalent when their Lehmer codes agree as multisets.
The classes of S_n are counted by the Catalan numbers, and each class has two
canonical representatives: its unique 132-avoiding member (where the sorted
code letters appear in nonincreasing order) and its unique 213-avoiding
member.  Single exchange moves connect a class, but the relation is not a
congruence for concatenation: appending the same letter to two equivalent
words can land their standardizations in different classes.
"""

from permcodes import (
    avoids_pattern,
    catalan,
    class_max,
    class_min,
    l_adjacent,
    l_class,
    l_classes,
    lehmer_code,
    parse_permutation,
    sorted_code,
    standardize,
)
from permcodes.codes import format_code
from permcodes.permutations import format_permutation


def main() -> None:
    n = 4
    classes = l_classes(n)
    print(f'S_{n} splits into {len(classes)} classes = Catalan({n}) = {catalan(n)}:')
    for cls in classes:
        members = ' '.join(format_permutation(p) for p in sorted(cls.members))
        print(f'  key {format_code(cls.key)}: {members}')
        assert avoids_pattern(cls.max_member, (1, 3, 2))
        assert avoids_pattern(cls.min_member, (2, 1, 3))
    print('  (each key line starts a class; max avoids 132, min avoids 213)')
    print()

    p = parse_permutation('31452')
    cls = l_class(p)
    print(f'class of {format_permutation(p)} '
          f'(sorted Lehmer code {format_code(cls.key)}):')
    for member in sorted(cls.members):
        print(f'  {format_permutation(member)}')
    print(f'max = {format_permutation(cls.max_member)}, '
          f'min = {format_permutation(cls.min_member)}')
    assert cls.max_member == class_max(p)
    assert cls.min_member == class_min(p)
    print()

    # Appending a letter can split a class.
    u, v = (1, 3, 2), (2, 1, 3)
    assert l_adjacent(u, v)
    u2, v2 = standardize(u + (2,)), standardize(v + (2,))
    print(f'{format_permutation(u)} and {format_permutation(v)} are one move'
          ' apart, but appending the letter 2 gives')
    print(f'  {format_permutation(u2)} with sorted code'
          f' {format_code(sorted_code(lehmer_code(u2)))} and'
          f' {format_permutation(v2)} with sorted code'
          f' {format_code(sorted_code(lehmer_code(v2)))}')
    assert l_class(u2).key != l_class(v2).key
    print('  -- different classes, so the relation is not a concatenation'
          ' congruence')


if __name__ == '__main__':
    main()
