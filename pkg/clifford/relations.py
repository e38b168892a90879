#!/usr/bin/env python3
"""
Relations - Exact checks of the defining relations c_i c_j = q c_j c_i and c_i^N = 1.
"""

from clifford.element import elements_equal, generator, identity, scale
from scalars.context import ScalarContext


def check_commutation(ctx: ScalarContext, n: int, i: int, j: int) -> bool:
    """c_i c_j = q c_j c_i for i < j."""
    ci = generator(ctx, n, i)
    cj = generator(ctx, n, j)
    return elements_equal(ci * cj, scale(ctx.q, cj * ci))


def check_generator_order(ctx: ScalarContext, n: int, i: int) -> bool:
    """c_i^N = 1."""
    return elements_equal(generator(ctx, n, i) ** ctx.N, identity(ctx, n))
