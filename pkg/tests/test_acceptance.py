"""Acceptance criteria 1-12, each timed against its limit.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; either
way one PASS/FAIL line is printed per criterion.
"""

import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
import sympy

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import criterion  # noqa: E402
from helpers import rand_lagrangian, rand_transverse_triple, same_ray  # noqa: E402
from legendrian import io  # noqa: E402
from legendrian.circles import circle_to_lagrangian, random_group_element  # noqa: E402
from legendrian.cli import main as cli_main  # noqa: E402
from legendrian.core import E1, E2, E3, E4, maslov_form, maslov_index, omega, signature_index  # noqa: E402
from legendrian.curves import contact_order_ratio, osculating_lagrangian  # noqa: E402
from legendrian.flags import (  # noqa: E402
    K,
    UnipotentParams,
    flags_to_polygon,
    in_positive_semigroup,
    parametrize_positive_triple,
    polygon_to_flags,
    random_semigroup_element,
    sample_positive_tuple,
    semigroup_inverse_identity_check,
    triple_positive,
    tuple_positive,
)
from legendrian.linalg import inverse, matmul, neg  # noqa: E402
from legendrian.polygon import (  # noqa: E402
    LegendrianPolygon,
    Transversality,
    edge_triple_indices,
    has_decreasing_curvature,
    is_generic,
    sample_transverse_polygon,
    segment_pair_nonincident,
    transversality_class,
)
from legendrian.render import find_crossings, polygon_scene, translate_frames, witness_translate  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return io.polygon_from_doc(io.load_file(FIXTURES / name))


# 1 ---------------------------------------------------------------------------


def test_criterion_1_quadrilateral_classification():
    with criterion(1, "quadrilaterals", 1.0):
        found = []
        for eps, s, t in itertools.product((1, -1), repeat=3):
            P = LegendrianPolygon((E1, E2, tuple(s * x for x in E4), tuple(-t * x for x in E3)), eps)
            cls = transversality_class(P)
            if cls.is_transverse:
                found.append((eps, s, t, cls))
        assert len(found) == 2
        assert all(eps == -1 for eps, *_ in found)
        assert {cls for *_, cls in found} == {Transversality.POSITIVE, Transversality.NEGATIVE}


# 2 ---------------------------------------------------------------------------


def test_criterion_2_octagon_transverse_not_positive_not_decreasing():
    with criterion(2, "transverse, not positive, no decreasing curvature", 1.0):
        P = load("octagon.json")
        assert transversality_class(P).is_transverse
        assert not tuple_positive(polygon_to_flags(P))
        assert not has_decreasing_curvature(P)


@pytest.mark.xfail(
    strict=True,
    reason="the octagon's edges [v1,v2] and [v6,v7] both contain (0,0,1,1), so two "
    "non-adjacent edge lines meet and the octagon is not generic",
)
def test_criterion_2_octagon_generic():
    with criterion(2, "generic", 1.0):
        assert is_generic(load("octagon.json"))


# 3 ---------------------------------------------------------------------------


def test_criterion_3_parametrized_triple():
    with criterion(3, "parametrized triple", 5.0):
        rng = random.Random(3)
        for _ in range(100):
            x = Fraction(rng.randint(1, 1000), 100)
            y = Fraction(rng.randint(1, 1000), 100)
            flags = parametrize_positive_triple(x, y)
            assert triple_positive(*flags)
            P = flags_to_polygon(flags)
            expected = [E1, (y, 1, 0, 0), (1, x + y + 1 / y, y, 1), (0, 1, 1, x + 1 / y), E4, neg(E3)]
            for got, want in zip(P.vertices, expected):
                assert same_ray(got, want), (got, want)
        # symbolic check of the same six vectors
        xs, ys = sympy.symbols("x y", positive=True)
        v3 = (1, xs + ys + 1 / ys, ys, 1)
        v4 = (0, 1, 1, xs + 1 / ys)
        v2 = (ys, 1, 0, 0)
        chain = [E1, v2, v3, v4, E4, neg(E3), neg(E1)]
        for a, b in zip(chain, chain[1:]):
            assert sympy.simplify(omega(a, b)) == 0
        P = flags_to_polygon(parametrize_positive_triple(1, 1))
        assert transversality_class(P) is Transversality.POSITIVE
        assert has_decreasing_curvature(P)


# 4 ---------------------------------------------------------------------------


def test_criterion_4_round_trips():
    with criterion(4, "round trips", 30.0):
        rng = random.Random(4)
        for trial in range(100):
            flags = sample_positive_tuple(3 + trial % 6, trial)
            P = flags_to_polygon(flags)
            assert polygon_to_flags(P) == flags
            scales = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(P.n)]
            Q = P.rescaled(scales)
            back = flags_to_polygon(polygon_to_flags(Q))
            assert all(same_ray(a, b) for a, b in zip(back.vertices, Q.vertices))


# 5 ---------------------------------------------------------------------------


def test_criterion_5_positivity_transfer():
    with criterion(5, "positivity transfer", 30.0):
        for trial in range(100):
            flags = sample_positive_tuple(3 + trial % 6, 1000 + trial)
            P = flags_to_polygon(flags)
            assert transversality_class(P) is Transversality.POSITIVE
            assert has_decreasing_curvature(P)
            assert tuple_positive(polygon_to_flags(P))


# 6 ---------------------------------------------------------------------------


def _eigen_index(G):
    eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in G]))
    assert min(abs(eig)) > 1e-9
    return int((np.sum(eig > 0) - np.sum(eig < 0)) // 2)


def test_criterion_6_maslov_suite():
    with criterion(6, "Maslov suite", 30.0):
        L = [circle_to_lagrangian(0, 0, c) for c in (1, 2, 3)]
        assert maslov_index(*L) == 1
        rng = random.Random(6)
        for _ in range(200):
            ls = rand_transverse_triple(rng)
            m = random_group_element(rng)
            assert maslov_index(*(x.transformed(m) for x in ls)) == maslov_index(*ls)
        for seed in range(100):
            F1, F2, F3 = sample_positive_tuple(3, seed)
            G = maslov_form(F1.plane, F2.plane, F3.plane)
            assert G[0][0] > 0 and G[0][0] * G[1][1] - G[0][1] * G[1][0] > 0
        seen = set()
        for _ in range(1000):
            G = maslov_form(*rand_transverse_triple(rng))
            idx = signature_index(G)
            assert idx == _eigen_index(G)
            seen.add(idx)
        assert seen == {-1, 0, 1}


# 7 ---------------------------------------------------------------------------


def _grid_oracle(u1, u2, v1, v2, n=100):
    """Sign pattern of phi(t, s) = omega((1-t)u1 + t u2, (1-s)v1 + s v2) on an
    interior n x n grid: nonincident iff every sample has the same strict sign."""
    A = np.array([[float(omega(p, q)) for q in (v1, v2)] for p in (u1, u2)])
    t = (np.arange(n) + 0.5) / n
    T = np.stack([1 - t, t])
    phi = T.T @ A @ T
    return bool(np.all(phi > 0) or np.all(phi < 0))


def _random_segment(rng):
    L = rand_lagrangian(rng)
    while True:
        (a1, b1), (a2, b2) = [(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))) for _ in range(2)]
        if a1 * b2 - a2 * b1 != 0:
            break
    u, v = L.basis
    return tuple(a1 * x + b1 * y for x, y in zip(u, v)), tuple(a2 * x + b2 * y for x, y in zip(u, v))


def test_criterion_7_segment_pair_oracle():
    with criterion(7, "segment pair oracle", 10.0):
        rng = random.Random(7)
        checked = verdicts = 0
        while checked < 200:
            (u1, u2), (v1, v2) = _random_segment(rng), _random_segment(rng)
            if not any(omega(p, q) for p in (u1, u2) for q in (v1, v2)):
                continue
            assert segment_pair_nonincident(u1, u2, v1, v2) == _grid_oracle(u1, u2, v1, v2)
            verdicts += segment_pair_nonincident(u1, u2, v1, v2)
            checked += 1
        assert 0 < verdicts < 200


# 8 ---------------------------------------------------------------------------


def test_criterion_8_semigroup_algebra():
    with criterion(8, "semigroup algebra", 5.0):
        rng = random.Random(8)
        for _ in range(100):
            p, q = random_semigroup_element(rng), random_semigroup_element(rng)
            r = UnipotentParams.from_matrix(matmul(p.matrix(), q.matrix()))
            assert r is not None and in_positive_semigroup(r)
            assert semigroup_inverse_identity_check(p)
            conj = UnipotentParams.from_matrix(matmul(matmul(K, inverse(p.matrix())), K))
            assert conj is not None and in_positive_semigroup(conj)


# 9 ---------------------------------------------------------------------------


def test_criterion_9_hexagon_dichotomy():
    with criterion(9, "hexagon dichotomy", 60.0):
        rng = random.Random(9)
        kinds = set()
        for _ in range(50):
            P = sample_transverse_polygon(6, rng)
            values = set(edge_triple_indices(P).values())
            assert values in ({1}, {-1}), values
            kinds |= values
        assert kinds == {1, -1}


# 10 --------------------------------------------------------------------------


def test_criterion_10_dictionary_simplicity():
    with criterion(10, "dictionary and simplicity", 30.0):
        P = load("crossed_quadrilateral.json")
        assert not transversality_class(P).is_transverse
        w = witness_translate(P)
        assert w is not None
        assert find_crossings(polygon_scene(w.translated()), tol=1e-6)
        rng = random.Random(10)
        for name in ("quadrilateral.json", "octagon.json"):
            Q = load(name)
            assert transversality_class(Q).is_transverse
            for _ in range(20):
                r = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
                _, frames = translate_frames(Q, r, 1)
                assert find_crossings(frames[0][1], tol=1e-6) == []


# 11 --------------------------------------------------------------------------


def test_criterion_11_veronese():
    with criterion(11, "Veronese", 10.0):
        t = sympy.symbols("t")
        gamma = (1, t, t**2, t**3 / 3)
        dgamma = tuple(sympy.diff(c, t) for c in gamma)
        assert sympy.simplify(omega(gamma, dgamma)) == 0
        assert 500 <= contact_order_ratio(1) <= 2000
        ts = [Fraction(k, 2) for k in range(-4, 5)]
        lags = {x: osculating_lagrangian(x) for x in ts}
        signs = {maslov_index(lags[a], lags[b], lags[c]) for a, b, c in itertools.combinations(ts, 3)}
        assert len(signs) == 1 and signs != {0}


# 12 --------------------------------------------------------------------------


def test_criterion_12_determinism(tmp_path, capsys):
    with criterion(12, "determinism", 5.0):
        outputs = []
        for run in ("a", "b"):
            out = tmp_path / run
            assert cli_main(["sample", "--k", "4", "--seed", "12", "--out", str(out / "sample")]) == 0
            assert cli_main(["veronese", "--samples", "20", "--polygon-k", "4", "--out", str(out / "veronese")]) == 0
            outputs.append({p.relative_to(out): p.read_bytes() for p in sorted(out.rglob("*")) if p.is_file()})
        capsys.readouterr()
        assert len(outputs[0]) == 6
        assert outputs[0] == outputs[1]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
