"""Tiny bitset helpers; element sets fit one machine word (cap 64)."""


def mask_of(it):
    m = 0
    for x in it:
        m |= 1 << x
    return m


def bits(mask):
    """Iterate set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def least(mask):
    return (mask & -mask).bit_length() - 1
