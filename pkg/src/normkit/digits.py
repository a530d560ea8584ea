"""
Decimal digit arithmetic on integers.

Counts are exact integer comparisons, so results hold for integers of any
size. A float estimate only picks the starting point of the search.
"""

from operator import index

# log10(2), used only to seed the digit estimate from the bit length
_LOG10_2 = 0.3010299956639812


def digit_count(x: int) -> int:
    """
    Return the number of decimal digits of ``|x|``.

    ``digit_count(0)`` is 1.

    >>> digit_count(1229)
    4
    >>> digit_count(-917)
    3
    """
    magnitude = abs(index(x))
    if magnitude < 10:
        return 1

    # An x of b bits has more than floor((b - 1) * log10(2)) digits.
    count = int((magnitude.bit_length() - 1) * _LOG10_2)
    while magnitude >= 10 ** count:
        count += 1
    return count


def leading_digit(x: int) -> int:
    """
    Return the most significant decimal digit of ``|x|`` (0 for 0).

    >>> leading_digit(9185)
    9
    >>> leading_digit(-2300)
    2
    """
    magnitude = abs(index(x))
    return magnitude // 10 ** (digit_count(magnitude) - 1)
