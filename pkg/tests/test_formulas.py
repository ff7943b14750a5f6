from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from denthex import (
    InvalidSpec,
    RatioSpec,
    build_region,
    ciucu,
    clp,
    count_tilings_oracle,
    delta,
    h2,
    hex_spec,
    p_spec,
    pp,
    pprime_spec,
    proctor,
    quartered,
    shuffle_ratio,
)

position_sets = st.lists(st.integers(1, 30), min_size=0, max_size=5, unique=True).map(
    lambda v: tuple(sorted(v))
)


def test_pp_trivials():
    assert pp(3, 5, 0) == 1
    assert pp(1, 1, 1) == 2
    assert pp(2, 2, 2) == 20


def test_pp_matches_oracle():
    assert pp(1, 1, 1) == count_tilings_oracle(build_region(hex_spec(1, 1, 1)))
    assert pp(2, 2, 2) == count_tilings_oracle(build_region(hex_spec(2, 2, 2)))


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_pp_symmetric(a, b, c):
    assert pp(a, b, c) == pp(b, c, a) == pp(c, a, b) == pp(a, c, b)


def test_clp_values():
    assert clp((7,)) == 1
    assert clp((1, 3)) == 2
    assert clp(()) == 1


@given(st.integers(1, 8))
def test_clp_of_initial_segment_is_one(a):
    assert clp(tuple(range(1, a + 1))) == 1


def test_h2_values():
    assert h2(0) == 1
    assert h2(1) == 1
    assert h2(2) == 1  # 0!
    assert h2(3) == 1  # 1!
    assert h2(4) == 2  # 0!2!
    assert h2(5) == 6  # 1!3!
    assert h2(7) == 720  # 1!3!5!


def test_proctor_trivials_and_edges():
    assert proctor(0, 5, 3) == 1
    assert proctor(1, 1, 1) == 2
    with pytest.raises(InvalidSpec):
        proctor(2, 1, 1)


def test_proctor_matches_oracle():
    assert proctor(1, 1, 1) == count_tilings_oracle(build_region(p_spec(1, 1, 1)))
    assert proctor(2, 2, 2) == count_tilings_oracle(build_region(p_spec(2, 2, 2)))


def test_ciucu_matches_oracle():
    assert ciucu(1, 1, 1) == count_tilings_oracle(build_region(pprime_spec(1, 1, 1)))
    assert ciucu(1, 1, 1) == Fraction(3, 2)
    assert ciucu(2, 2, 1) == count_tilings_oracle(build_region(pprime_spec(2, 2, 1)))


def test_delta_values():
    assert delta((1, 2, 3), "Squares") == 3 * 8 * 5
    assert delta((1, 3), "OddShift") == 2 * 3
    assert delta((2,), "WeightedTri") == 3  # single i = j term 2+2-1
    assert delta((1, 3), "EvenShift") == 2 * 2
    assert delta((), "Squares") == 1


def test_delta_unknown_kind():
    with pytest.raises(InvalidSpec):
        delta((1, 2), "Cubes")


@given(position_sets, st.integers(1, 40), st.integers(1, 40))
def test_delta_square_cancellation(s, alpha, beta):
    # delta(bS) delta(aS) / (delta(S) delta(abS)) == 1/(b^2 - a^2)
    if alpha >= beta or alpha in s or beta in s:
        return
    with_a = tuple(sorted(s + (alpha,)))
    with_b = tuple(sorted(s + (beta,)))
    with_ab = tuple(sorted(s + (alpha, beta)))
    lhs = Fraction(delta(with_b, "Squares") * delta(with_a, "Squares"))
    rhs_den = delta(s, "Squares") * delta(with_ab, "Squares")
    assert lhs / rhs_den == Fraction(1, beta**2 - alpha**2)


def test_quartered_values():
    assert quartered("L-even", (5,)) == 5
    assert quartered("L-odd", (5,)) == 1
    assert quartered("Lbar-even", (1,)) == Fraction(1, 2)
    assert quartered("Lbar-even", (2,)) == Fraction(3, 2)
    assert quartered("Lbar-odd", (4,)) == 1
    assert quartered("L-even", ()) == 1
    with pytest.raises(InvalidSpec):
        quartered("L-odd", ())
    with pytest.raises(InvalidSpec):
        quartered("L-flat", (1,))


def test_ratio_spec_validation():
    with pytest.raises(InvalidSpec, match="U ∪ D"):
        RatioSpec("F", (1,), (2,), (1,), (3,), 1)
    with pytest.raises(InvalidSpec, match="U ∩ D"):
        RatioSpec("F", (1,), (1, 2), (1,), (2,), 1)
    with pytest.raises(InvalidSpec, match="odd y"):
        RatioSpec("RS-odd", (1,), (2,), (2,), (1,), 2)
    with pytest.raises(InvalidSpec, match="even y"):
        RatioSpec("RS-even", (1,), (2,), (2,), (1,), 1)


def test_shuffle_ratio_identity_when_no_shuffle():
    for fam in ("H", "F", "Fbar", "W", "Wbar"):
        rs = RatioSpec(fam, (1, 3), (2,), (1, 3), (2,), 1)
        assert shuffle_ratio(rs) == 1


def test_shuffle_ratio_singleton_swap_is_one():
    for fam, y in (("H", 2), ("F", 1), ("Fbar", 1), ("W", 0), ("Wbar", 2), ("RS-odd", 1), ("RS-even", 2)):
        rs = RatioSpec(fam, (1,), (2,), (2,), (1,), y)
        assert shuffle_ratio(rs) == 1


def test_shuffle_ratio_rs_odd_example():
    rs = RatioSpec("RS-odd", (1, 2), (), (1,), (2,), 1)
    # squares product 3, hyperfactorial ratio h2(3)^2/(h2(5) h2(1)) = 1/6
    assert shuffle_ratio(rs) == Fraction(1, 2)


def _random_splits(universe, overlap, draw):
    ups = set(overlap) | {v for v in universe if v not in overlap and draw(v)}
    downs = (set(universe) - ups) | set(overlap)
    return tuple(sorted(ups)), tuple(sorted(downs))


@given(
    st.lists(st.integers(1, 12), min_size=1, max_size=4, unique=True),
    st.integers(0, 2),
    st.data(),
)
def test_shuffle_ratio_composition(universe, y, data):
    universe = sorted(universe)
    overlap = [v for v in universe if data.draw(st.booleans(), label=f"ov{v}")]

    def split(tag):
        ups = set(overlap) | {
            v for v in universe if v not in overlap and data.draw(st.booleans(), label=f"{tag}{v}")
        }
        downs = (set(universe) - ups) | set(overlap)
        return tuple(sorted(ups)), tuple(sorted(downs))

    a_up, a_down = split("a")
    b_up, b_down = split("b")
    c_up, c_down = split("c")
    fam = "F"
    ab = shuffle_ratio(RatioSpec(fam, a_up, a_down, b_up, b_down, y))
    bc = shuffle_ratio(RatioSpec(fam, b_up, b_down, c_up, c_down, y))
    ac = shuffle_ratio(RatioSpec(fam, a_up, a_down, c_up, c_down, y))
    assert ab * bc == ac


@given(
    st.lists(st.integers(1, 10), min_size=1, max_size=4, unique=True),
    st.integers(0, 2),
    st.data(),
)
def test_shuffle_ratio_positive(universe, y, data):
    universe = sorted(universe)
    ups = {v for v in universe if data.draw(st.booleans(), label=f"u{v}")}
    downs = set(universe) - ups
    ups2 = {v for v in universe if data.draw(st.booleans(), label=f"v{v}")}
    downs2 = set(universe) - ups2
    for fam in ("H", "F", "W"):
        rs = RatioSpec(
            fam,
            tuple(sorted(ups)),
            tuple(sorted(downs)),
            tuple(sorted(ups2)),
            tuple(sorted(downs2)),
            y,
        )
        assert shuffle_ratio(rs) > 0
