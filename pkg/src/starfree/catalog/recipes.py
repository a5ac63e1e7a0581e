"""Constructive recipes for the named groups in the catalog.

The shipped catalog data is generated from these functions (see
``tools/generate_catalog.py``); the test suite rebuilds every recipe and
checks it against the data. The dihedral family is also used directly for
orders beyond the catalog.
"""

from __future__ import annotations

from functools import reduce
from itertools import product
from typing import Callable

import numpy as np

from starfree.group import (
    FiniteGroup,
    Permutation,
    action_from_generators,
    direct_product,
    from_cayley_table,
    from_generators,
    from_permutation_generators,
    semidirect_product,
    trivial_group,
)

P = Permutation.from_cycles


def cyclic(n: int) -> FiniteGroup:
    """C_n; element k is the k-th power of the generator."""
    if n == 1:
        return trivial_group()
    return from_permutation_generators([P(n, [list(range(n))])], f"C{n}")


def abelian(*orders: int) -> FiniteGroup:
    """Direct product of cyclic groups, e.g. ``abelian(4, 2)`` is C4 x C2."""
    label = "x".join(f"C{m}" for m in orders)
    return reduce(direct_product, [cyclic(m) for m in orders]).with_label(label)


def dihedral(n: int) -> FiniteGroup:
    """D_{2n}, the symmetry group of the regular n-gon (order 2n, n >= 3)."""
    if n < 3:
        raise ValueError("dihedral recipe needs n >= 3")
    rot = P(n, [list(range(n))])
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return from_permutation_generators([rot, ref], f"D{2 * n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dic_{4n} = <a, x | a^{2n}, x^2 = a^n, x a x^-1 = a^-1>, order 4n.

    Element ``k + 2n*e`` stands for a^k x^e.
    """
    m = 2 * n
    table = np.empty((2 * m, 2 * m), dtype=np.int64)
    for i, e, j, f in product(range(m), (0, 1), range(m), (0, 1)):
        if e == 0:
            k, g = (i + j) % m, f
        elif f == 0:
            k, g = (i - j) % m, 1
        else:
            k, g = (i - j + n) % m, 0
        table[i + m * e, j + m * f] = k + m * g
    return from_cayley_table(table, f"Dic{4 * n}" if n > 2 else "Q8")


def symmetric(n: int) -> FiniteGroup:
    gens = [P(n, [list(range(n))]), P(n, [[0, 1]])]
    return from_permutation_generators(gens, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n == 4:
        gens = [P(4, [[0, 1, 2]]), P(4, [[0, 1], [2, 3]])]
    elif n == 5:
        gens = [P(5, [[0, 1, 2, 3, 4]]), P(5, [[0, 1, 2]])]
    else:
        gens = [P(n, [[0, 1, i]]) for i in range(2, n)]
    return from_permutation_generators(gens, f"A{n}")


def power_semidirect(m: int, k: int, r: int, label: str | None = None) -> FiniteGroup:
    """C_m x| C_k where the generator of C_k acts by x -> x^r."""
    if pow(r, k, m) != 1 % m:
        raise ValueError(f"x -> x^{r} does not have order dividing {k} mod {m}")
    N, H = cyclic(m), cyclic(k)
    act = [np.array([(x * pow(r, h, m)) % m for x in range(m)]) for h in range(k)]
    return semidirect_product(N, H, act, label)


def generalized_dihedral(A: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """A x| C2 with the involution acting by inversion (A abelian)."""
    if not A.is_abelian:
        raise ValueError("generalized dihedral needs an abelian group")
    C2 = cyclic(2)
    return semidirect_product(A, C2, [np.arange(A.order), A.inverses], label)


def matrix_group(gens: list[list[list[int]]], p: int, label: str | None = None) -> FiniteGroup:
    """Group generated by square integer matrices modulo the prime p."""
    d = len(gens[0])
    as_tuple = lambda a: tuple(tuple(int(v) % p for v in row) for row in a)  # noqa: E731

    def mul(a, b):
        return as_tuple(np.asarray(a) @ np.asarray(b))

    return from_generators([as_tuple(g) for g in gens], mul, as_tuple(np.eye(d, dtype=int)), label)


def special_linear_2_3() -> FiniteGroup:
    return matrix_group([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], 3, "SL(2,3)")


def general_affine_1_5() -> FiniteGroup:
    """x -> ax + b over GF(5); order 20, the Frobenius group F20."""
    return power_semidirect(5, 4, 2, "GA(1,5)")


def c4xc2_rtimes_c2(kind: str) -> FiniteGroup:
    """The two groups (C4 x C2) x| C2 with centre of order 4.

    With C4 x C2 = <a> x <b>, the involution c acts by
    ``a`` variant: a -> ab, b -> b;  ``b`` variant: a -> a, b -> a^2 b.
    The ``b`` variant is the central product C4 o D8 (Pauli group).
    """
    N = abelian(4, 2)  # a^i b^j sits at index 2i + j
    if kind == "a":
        image = [2 * i + ((i + j) % 2) for i in range(4) for j in range(2)]
    elif kind == "b":
        image = [2 * ((i + 2 * j) % 4) + j for i in range(4) for j in range(2)]
    else:
        raise ValueError(kind)
    return semidirect_product(N, cyclic(2), [np.arange(8), np.asarray(image)], f"C4xC2_rtimes_C2_{kind}")


def c3_rtimes_d8() -> FiniteGroup:
    """C3 x| D8 where the kernel of the action is a Klein four-group."""
    D8, C3 = dihedral(4), cyclic(3)
    rot, ref = D8.generators
    act = action_from_generators(D8, C3, [rot, ref], [C3.inverses, np.arange(3)])
    return semidirect_product(C3, D8, act, "C3_rtimes_D8")


def heisenberg_3() -> FiniteGroup:
    """(<a> x <b>) x| <c> over C3 with a -> a, b -> ab; exponent 3."""
    N = abelian(3, 3)  # a^i b^j sits at index 3i + j
    H = cyclic(3)
    image = np.asarray([3 * ((i + j) % 3) + j for i in range(3) for j in range(3)])
    act = action_from_generators(H, N, H.generators, [image])
    return semidirect_product(N, H, act, "C3xC3_rtimes_C3")


def c3_rtimes_q8() -> FiniteGroup:
    return dicyclic(6).with_label("Dic24")


def _x(*parts: FiniteGroup, label: str) -> FiniteGroup:
    return reduce(direct_product, parts).with_label(label)


def _named() -> dict[str, Callable[[], FiniteGroup]]:
    C, D = cyclic, dihedral
    r: dict[str, Callable[[], FiniteGroup]] = {"C1": trivial_group}
    for n in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]:
        r[f"C{n}"] = lambda n=n: C(n)
    abelian_types = [
        (4,), (2, 2), (6,), (8,), (4, 2), (2, 2, 2), (9,), (3, 3), (10,), (12,), (6, 2),
        (14,), (15,), (16,), (8, 2), (4, 4), (4, 2, 2), (2, 2, 2, 2), (18,), (6, 3),
        (20,), (10, 2), (21,), (22,), (24,), (12, 2), (6, 2, 2), (25,), (5, 5), (26,),
        (28,), (14, 2), (30,), (50,), (10, 5), (60,), (30, 2), (27,), (9, 3), (3, 3, 3),
    ]
    for t in abelian_types:
        name = "x".join(f"C{m}" for m in t)
        r[name] = lambda t=t: abelian(*t)
    for n in [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 25, 30]:
        r[f"D{2 * n}"] = lambda n=n: D(n)
    r["S3"] = lambda: symmetric(3)
    r["S4"] = lambda: symmetric(4)
    r["A4"] = lambda: alternating(4)
    r["A5"] = lambda: alternating(5)
    r["Q8"] = lambda: dicyclic(2)
    r["Q16"] = lambda: dicyclic(4)
    r["Dic12"] = lambda: power_semidirect(3, 4, 2, "Dic12")
    r["Dic20"] = lambda: power_semidirect(5, 4, 4, "Dic20")
    r["Dic24"] = c3_rtimes_q8
    r["Dic28"] = lambda: power_semidirect(7, 4, 6, "Dic28")
    r["Dic60"] = lambda: power_semidirect(15, 4, 14, "Dic60")
    r["GA(1,5)"] = general_affine_1_5
    r["SL(2,3)"] = special_linear_2_3
    r["SD16"] = lambda: power_semidirect(8, 2, 3, "SD16")
    r["C8_rtimes_C2"] = lambda: power_semidirect(8, 2, 5, "C8_rtimes_C2")
    r["C4_rtimes_C4"] = lambda: power_semidirect(4, 4, 3, "C4_rtimes_C4")
    r["C4xC2_rtimes_C2_a"] = lambda: c4xc2_rtimes_c2("a")
    r["C4xC2_rtimes_C2_b"] = lambda: c4xc2_rtimes_c2("b")
    r["C2xD8"] = lambda: _x(C(2), D(4), label="C2xD8")
    r["C2xQ8"] = lambda: _x(C(2), dicyclic(2), label="C2xQ8")
    r["C3xS3"] = lambda: _x(C(3), symmetric(3), label="C3xS3")
    r["C3xC3_rtimes_C2"] = lambda: generalized_dihedral(abelian(3, 3), "C3xC3_rtimes_C2")
    r["C7_rtimes_C3"] = lambda: power_semidirect(7, 3, 2, "C7_rtimes_C3")
    r["C3_rtimes_C8"] = lambda: power_semidirect(3, 8, 2, "C3_rtimes_C8")
    r["C4xS3"] = lambda: _x(C(4), symmetric(3), label="C4xS3")
    r["C2xDic12"] = lambda: _x(C(2), power_semidirect(3, 4, 2), label="C2xDic12")
    r["C3_rtimes_D8"] = c3_rtimes_d8
    r["C3xD8"] = lambda: _x(C(3), D(4), label="C3xD8")
    r["C3xQ8"] = lambda: _x(C(3), dicyclic(2), label="C3xQ8")
    r["C2xA4"] = lambda: _x(C(2), alternating(4), label="C2xA4")
    r["C2xC2xS3"] = lambda: _x(C(2), C(2), symmetric(3), label="C2xC2xS3")
    r["C5xS3"] = lambda: _x(C(5), symmetric(3), label="C5xS3")
    r["C3xD10"] = lambda: _x(C(3), D(5), label="C3xD10")
    r["C5xD10"] = lambda: _x(C(5), D(5), label="C5xD10")
    r["C5xC5_rtimes_C2"] = lambda: generalized_dihedral(abelian(5, 5), "C5xC5_rtimes_C2")
    r["C5xA4"] = lambda: _x(C(5), alternating(4), label="C5xA4")
    r["C3xGA(1,5)"] = lambda: power_semidirect(15, 4, 7, "C3xGA(1,5)")
    r["C15_rtimes_C4"] = lambda: power_semidirect(15, 4, 2, "C15_rtimes_C4")
    r["C5xDic12"] = lambda: power_semidirect(15, 4, 11, "C5xDic12")
    r["C3xDic20"] = lambda: power_semidirect(15, 4, 4, "C3xDic20")
    r["S3xD10"] = lambda: _x(symmetric(3), D(5), label="S3xD10")
    r["C6xD10"] = lambda: _x(C(6), D(5), label="C6xD10")
    r["C10xS3"] = lambda: _x(C(10), symmetric(3), label="C10xS3")
    r["C9_rtimes_C3"] = lambda: power_semidirect(9, 3, 4, "C9_rtimes_C3")
    r["C3xC3_rtimes_C3"] = heisenberg_3
    return {name: (lambda f=f, name=name: f().with_label(name)) for name, f in r.items()}


RECIPES: dict[str, Callable[[], FiniteGroup]] = _named()
"""Catalog name -> zero-argument constructor."""

# names of the groups of each order built from the recipes above
ORDER_NAMES: dict[int, list[str]] = {
    1: ["C1"],
    2: ["C2"],
    3: ["C3"],
    4: ["C4", "C2xC2"],
    5: ["C5"],
    6: ["C6", "S3"],
    7: ["C7"],
    8: ["C8", "C4xC2", "C2xC2xC2", "D8", "Q8"],
    9: ["C9", "C3xC3"],
    10: ["C10", "D10"],
    11: ["C11"],
    12: ["C12", "C6xC2", "D12", "A4", "Dic12"],
    13: ["C13"],
    14: ["C14", "D14"],
    15: ["C15"],
    16: [
        "C16", "C8xC2", "C4xC4", "C4xC2xC2", "C2xC2xC2xC2", "D16", "SD16", "Q16",
        "C8_rtimes_C2", "C4_rtimes_C4", "C4xC2_rtimes_C2_a", "C4xC2_rtimes_C2_b",
        "C2xD8", "C2xQ8",
    ],
    17: ["C17"],
    18: ["C18", "C6xC3", "D18", "C3xS3", "C3xC3_rtimes_C2"],
    19: ["C19"],
    20: ["C20", "C10xC2", "D20", "Dic20", "GA(1,5)"],
    21: ["C21", "C7_rtimes_C3"],
    22: ["C22", "D22"],
    23: ["C23"],
    24: [
        "C24", "C12xC2", "C6xC2xC2", "C3_rtimes_C8", "SL(2,3)", "Dic24", "C4xS3", "D24",
        "C2xDic12", "C3_rtimes_D8", "C3xD8", "C3xQ8", "S4", "C2xA4", "C2xC2xS3",
    ],
    25: ["C25", "C5xC5"],
    26: ["C26", "D26"],
    27: ["C27", "C9xC3", "C3xC3xC3", "C9_rtimes_C3", "C3xC3_rtimes_C3"],
    28: ["C28", "C14xC2", "D28", "Dic28"],
    29: ["C29"],
    30: ["C30", "D30", "C5xS3", "C3xD10"],
    31: ["C31"],
    50: ["C50", "C10xC5", "D50", "C5xD10", "C5xC5_rtimes_C2"],
    60: [
        "C60", "C30xC2", "A5", "C5xA4", "C3xGA(1,5)", "C15_rtimes_C4", "Dic60",
        "C5xDic12", "C3xDic20", "S3xD10", "C6xD10", "C10xS3", "D60",
    ],
}

DESCRIPTIONS: dict[str, str] = {
    "Q8": "quaternion group, dicyclic of order 8",
    "Q16": "generalized quaternion, dicyclic of order 16",
    "Dic12": "C3 x| C4, generator inverts",
    "Dic20": "C5 x| C4, generator inverts",
    "Dic24": "C3 x| Q8, dicyclic of order 24",
    "Dic28": "C7 x| C4, generator inverts",
    "Dic60": "C15 x| C4, generator inverts",
    "GA(1,5)": "C5 x| C4, x -> x^2 (affine group of GF(5))",
    "SL(2,3)": "2x2 matrices of determinant 1 over GF(3)",
    "SD16": "C8 x| C2, x -> x^3",
    "C8_rtimes_C2": "C8 x| C2, x -> x^5 (modular group M16)",
    "C4_rtimes_C4": "C4 x| C4, generator inverts",
    "C4xC2_rtimes_C2_a": "(<a> x <b>) x| <c>, a -> ab, b -> b",
    "C4xC2_rtimes_C2_b": "(<a> x <b>) x| <c>, a -> a, b -> a^2 b (C4 o D8)",
    "C3xC3_rtimes_C2": "C3 x C3 x| C2 by inversion",
    "C5xC5_rtimes_C2": "C5 x C5 x| C2 by inversion",
    "C7_rtimes_C3": "C7 x| C3, x -> x^2",
    "C3_rtimes_C8": "C3 x| C8, generator inverts",
    "C3_rtimes_D8": "C3 x| D8, kernel a Klein four-group",
    "C3xGA(1,5)": "C15 x| C4, x -> x^7",
    "C15_rtimes_C4": "C15 x| C4, x -> x^2",
    "C5xDic12": "C15 x| C4, x -> x^11",
    "C3xDic20": "C15 x| C4, x -> x^4",
    "C9_rtimes_C3": "C9 x| C3, x -> x^4",
    "C3xC3_rtimes_C3": "Heisenberg group mod 3, exponent 3",
}


def describe(name: str) -> str:
    if name in DESCRIPTIONS:
        return DESCRIPTIONS[name]
    if name.startswith("D") and name[1:].isdigit():
        return f"dihedral group of order {name[1:]}"
    if name[:1] in "SA" and name[1:].isdigit():
        return ("symmetric" if name[0] == "S" else "alternating") + f" group on {name[1:]} points"
    return "direct product " + " x ".join(name.split("x")) if "x" in name else "cyclic group"
