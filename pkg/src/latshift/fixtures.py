"""Built-in example posets used throughout the test corpus and the CLI.

Each builder returns a fresh validated object. `emit` renders the JSON
interchange document; `verify` re-derives every headline number the fixtures
are known for and reports pass/fail per check.
"""

from __future__ import annotations

from .poset import FVector, RankedPoset


def square() -> RankedPoset:
    """Face poset of a regular CW square: one 2-cell 1234 glued to a 4-cycle."""
    ranks = {"0": 0}
    covers = []
    for v in "1234":
        ranks[v] = 1
        covers.append(("0", v))
    for e in ("12", "23", "34", "14"):
        ranks[e] = 2
        covers.append((e[0], e))
        covers.append((e[1], e))
    ranks["1234"] = 3
    for e in ("12", "23", "34", "14"):
        covers.append((e, "1234"))
    return RankedPoset.from_data(ranks, covers)


def c4() -> RankedPoset:
    """4-cycle graph as a simplicial complex (the square without its cell)."""
    ranks = {"0": 0}
    covers = []
    for v in "1234":
        ranks[v] = 1
        covers.append(("0", v))
    for e in ("12", "23", "34", "14"):
        ranks[e] = 2
        covers.append((e[0], e))
        covers.append((e[1], e))
    return RankedPoset.from_data(ranks, covers)


def triangle() -> RankedPoset:
    """Empty triangle: 3-cycle graph complex, f = (1,3,3)."""
    ranks = {"0": 0, "1": 1, "2": 1, "3": 1, "12": 2, "13": 2, "23": 2}
    covers = [("0", "1"), ("0", "2"), ("0", "3")]
    for e in ("12", "13", "23"):
        covers.append((e[0], e))
        covers.append((e[1], e))
    return RankedPoset.from_data(ranks, covers)


def triangle_complex() -> RankedPoset:
    """Full 2-simplex face poset, f = (1,3,3,1)."""
    ranks = {"0": 0, "1": 1, "2": 1, "3": 1, "12": 2, "13": 2, "23": 2, "123": 3}
    covers = [("0", "1"), ("0", "2"), ("0", "3")]
    for e in ("12", "13", "23"):
        covers.append((e[0], e))
        covers.append((e[1], e))
        covers.append((e, "123"))
    return RankedPoset.from_data(ranks, covers)


def threelines() -> RankedPoset:
    """Three lines in general position: plane at rank 0 (reverse inclusion),

    lines at rank 1, the three pairwise intersection points at rank 2."""
    ranks = {"0": 0, "l1": 1, "l2": 1, "l3": 1, "p12": 2, "p13": 2, "p23": 2}
    covers = [
        ("0", "l1"),
        ("0", "l2"),
        ("0", "l3"),
        ("l1", "p12"),
        ("l2", "p12"),
        ("l1", "p13"),
        ("l3", "p13"),
        ("l2", "p23"),
        ("l3", "p23"),
    ]
    return RankedPoset.from_data(ranks, covers)


def pencil() -> RankedPoset:
    """Three concurrent lines: a single intersection point above all three."""
    ranks = {"0": 0, "l1": 1, "l2": 1, "l3": 1, "p": 2}
    covers = [("0", "l1"), ("0", "l2"), ("0", "l3"), ("l1", "p"), ("l2", "p"), ("l3", "p")]
    return RankedPoset.from_data(ranks, covers)


def tree() -> RankedPoset:
    """Rooted binary tree of depth 2 turned into a ranked lattice: leaves at

    rank 1, root on top, synthetic bottom below the leaves. f = (1,4,2,1)."""
    from .lprime import tree_lattice

    children = {"r": ["a", "b"], "a": ["a1", "a2"], "b": ["b1", "b2"]}
    return tree_lattice("r", children)


def square_lprime() -> RankedPoset:
    """The multichain poset of the square with families bounded by rank."""
    from .lprime import FamilySpec, build_lprime

    return build_lprime(square(), FamilySpec("rank-bounded"))


def multicomplex_1221():
    """Multicomplex {1, x, y, x^2, xy, x^3} with f = (1,2,2,1), as a P-poset."""
    from .symmetric import PPoset

    return PPoset.from_multicomplex(
        {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (3, 0)}, nvars=2
    )


_POSET_BUILDERS = {
    "square": square,
    "square-lprime": square_lprime,
    "c4": c4,
    "triangle": triangle,
    "triangle-complex": triangle_complex,
    "3lines": threelines,
    "pencil": pencil,
    "tree": tree,
}

_PPOSET_BUILDERS = {
    "multicomplex-1221": multicomplex_1221,
}


def names() -> tuple[str, ...]:
    return tuple(sorted(_POSET_BUILDERS) + sorted(_PPOSET_BUILDERS))


def get(name: str):
    if name in _POSET_BUILDERS:
        return _POSET_BUILDERS[name]()
    if name in _PPOSET_BUILDERS:
        return _PPOSET_BUILDERS[name]()
    raise KeyError(f"unknown fixture {name!r}")


def emit(name: str) -> dict:
    return get(name).to_doc()


def verify() -> list[tuple[str, bool, str]]:
    """Re-derive every headline fixture number; returns (check, ok, detail) rows."""
    from . import exterior, lprime, properties, symmetric
    from .bounds import check_macaulay, macaulay_shadow_bound

    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = ""):
        checks.append((name, bool(ok), detail))

    fv = {
        "square": (1, 4, 4, 1),
        "square-lprime": (1, 4, 8, 13),
        "c4": (1, 4, 4),
        "triangle": (1, 3, 3),
        "triangle-complex": (1, 3, 3, 1),
        "3lines": (1, 3, 3),
        "pencil": (1, 3, 1),
        "tree": (1, 4, 2, 1),
    }
    for name, expect in fv.items():
        got = get(name).f_vector()
        add(f"fvector:{name}", got == FVector(expect), f"got {got}")

    pfv = multicomplex_1221().poset.f_vector()
    add("fvector:multicomplex-1221", pfv == FVector((1, 2, 2, 1)), f"got {pfv}")

    lp = square_lprime()
    rank3 = {
        "[1,1,1]", "[1,14]", "[4,14]", "[1,12]", "[2,12]", "[2,2,2]", "[1234]",
        "[2,23]", "[3,23]", "[3,3,3]", "[3,34]", "[4,34]", "[4,4,4]",
    }
    add(
        "square-lprime:rank3-elements",
        set(lp.elements_of_rank(3)) == rank3,
        f"got {sorted(lp.elements_of_rank(3))}",
    )
    add("square-lprime:macaulay", check_macaulay(lp.f_vector()).ok)
    rep = properties.verify_shadow_theorem(lp, "macaulay")
    margins = {row.k: (row.bound, row.actual) for row in rep.rows}
    add(
        "square-lprime:tight-margins",
        margins.get(2) == (8, 8) and margins.get(1) == (4, 4),
        f"got {margins}",
    )
    add("bounds:d2(13)=8", macaulay_shadow_bound(13, 3) == 8)
    add("bounds:d1(8)=4", macaulay_shadow_bound(8, 2) == 4)

    bary = lprime.build_lprime(triangle_complex(), lprime.FamilySpec("chains"))
    add("triangle-complex:barycentric", bary.f_vector() == FVector((1, 7, 12, 6)), f"got {bary.f_vector()}")

    add("square:not-geometric", not properties.check_geometric(square()).ok)
    add("3lines:geometric", properties.check_geometric(threelines()).ok)
    add("square:diamond", properties.check_diamond(square()).ok)
    add("tree:parallelogram", properties.check_parallelogram(tree()).ok)

    delta_c4 = exterior.shift_exterior(c4(), seed=1)
    add(
        "c4:exterior-shift",
        delta_c4.faces_of_dim(1) == {(1, 2), (1, 3), (1, 4), (2, 3)},
        f"got {sorted(delta_c4.faces_of_dim(1))}",
    )
    delta_pencil = exterior.shift_exterior(pencil(), seed=1)
    add("pencil:exterior-shift", delta_pencil.faces_of_dim(1) == {(1, 2)})

    mc = multicomplex_1221()
    ideal = symmetric.shift_symmetric(mc, seed=1)
    add("multicomplex-1221:symmetric-fvector", ideal.f_vector() == FVector((1, 2, 2, 1)))
    add("multicomplex-1221:order-ideal", properties.check_order_ideal(ideal.monomials).ok)

    return checks
