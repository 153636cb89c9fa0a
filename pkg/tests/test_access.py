import pytest

from gaussmig.access import (
    AccessStructure,
    WeightedThreshold,
    coalition_norm,
    enumerate_structure,
    gen_threshold_params,
    realize,
    realize_with,
    threshold_structure,
    weighted_representation,
)
from gaussmig.counting import secret_space_size
from gaussmig.errors import DegenerateStructure, NotPairwiseCoprime, SearchExhausted
from gaussmig.gint import GaussianInt as G, are_coprime, norm
from gaussmig.scheme import SchemeParams, validate_params

from oracles import all_antichains


def S(n, *sets):
    return AccessStructure(n, frozenset(frozenset(s) for s in sets))


def test_coalition_norm(ej2_params):
    assert coalition_norm(ej2_params, {1, 2}) == 178504 == 421 * 424
    assert coalition_norm(ej2_params, {3}) == 425
    assert coalition_norm(SchemeParams((G(0, 1), G(3)), 1, 5), {1}) == 1
    with pytest.raises(ValueError):
        coalition_norm(ej2_params, set())


def test_enumerate_examples(ej2_params, weighted_params):
    assert enumerate_structure(weighted_params) == S(3, {1, 3}, {2, 3})
    assert enumerate_structure(ej2_params) == threshold_structure(2, 3)
    every = SchemeParams(ej2_params.moduli, 1, 1)
    assert enumerate_structure(every) == threshold_structure(1, 3)


def test_structure_basics():
    s = AccessStructure.parse("1,3\n# comment\n\n2 , 3\n")
    assert s == S(3, {1, 3}, {2, 3})
    assert s.maximal_unauthorized() == [frozenset({1, 2}), frozenset({3})]
    assert s.is_authorized({1, 2, 3}) and not s.is_authorized({1, 2})
    assert AccessStructure.parse(s.to_text()) == s
    assert AccessStructure.parse("1,2", n=4).n == 4
    assert threshold_structure(2, 3).maximal_unauthorized() == [frozenset({i}) for i in (1, 2, 3)]


@pytest.mark.parametrize("text", ["", "# nothing\n", "1,x", "0,1", "1,,"])
def test_structure_parse_errors(text):
    with pytest.raises(ValueError):
        AccessStructure.parse(text)


def test_structure_rejects_non_antichain():
    with pytest.raises(ValueError):
        S(2, {1}, {1, 2})
    assert AccessStructure.from_family(2, [{1}, {1, 2}]) == S(2, {1})
    with pytest.raises(ValueError):
        S(2, {3})


def test_realize_hand_example():
    p = realize_with(S(3, {1, 3}, {2, 3}), [G(3), G(3, 2)])
    assert p.moduli == (G(3, 2), G(3, 2), G(3))
    assert (p.m_plus, p.m_minus) == (117, 13)
    assert enumerate_structure(p) == S(3, {1, 3}, {2, 3})
    assert validate_params(p).valid


def test_realize_threshold():
    p = realize(threshold_structure(2, 4), seed=4)
    assert enumerate_structure(p) == threshold_structure(2, 4)
    assert validate_params(p).valid


def test_realize_degenerate():
    with pytest.raises(DegenerateStructure):
        realize(threshold_structure(1, 3))
    with pytest.raises(DegenerateStructure):
        realize(AccessStructure(3, frozenset()))
    with pytest.raises(DegenerateStructure):
        realize(AccessStructure(2, frozenset({frozenset()})))


def test_realize_dummy_participant():
    s = S(3, {1, 2})
    p = realize(s, seed=2)
    assert norm(p.moduli[2]) == 1
    assert enumerate_structure(p) == s


def test_realize_exhaustive_small():
    for n in (1, 2, 3):
        for fam in all_antichains(n):
            s = AccessStructure(n, fam)
            if not fam or s.maximal_unauthorized() == [frozenset()]:
                continue
            p = realize(s, seed=n)
            assert enumerate_structure(p) == s
            assert validate_params(p).valid


def test_realize_deterministic():
    s = S(4, {1, 2}, {3, 4})
    assert realize(s, 20, 7) == realize(s, 20, 7)


def test_secret_space_grows_with_norm_floor():
    s = S(3, {1, 3}, {2, 3})
    small = realize(s, 9, 1)
    large = realize(s, 500, 1)
    size_small = secret_space_size(small.m_minus, small.m_plus)
    size_large = secret_space_size(large.m_minus, large.m_plus)
    assert size_large > size_small
    assert size_large >= 10**5


def test_coprime_norm_multiplicative(ej2_params):
    from itertools import combinations
    for k in (1, 2, 3):
        for c in combinations((1, 2, 3), k):
            expected = 1
            for i in c:
                expected *= norm(ej2_params.moduli[i - 1])
            assert coalition_norm(ej2_params, c) == expected


def test_gen_threshold_near_ej2():
    p = gen_threshold_params(2, 3, (400, 450), seed=1)
    assert enumerate_structure(p) == threshold_structure(2, 3)
    assert validate_params(p).valid
    norms = [norm(m) for m in p.moduli]
    assert norms == sorted(norms) and len(set(norms)) == 3
    assert all(are_coprime(a, b) for i, a in enumerate(p.moduli) for b in p.moduli[i + 1:])


def test_gen_threshold_edges():
    p = gen_threshold_params(1, 1, (50, 100), seed=0)
    assert p.n == 1 and p.m_minus == 1 and p.m_plus == norm(p.moduli[0])
    full = gen_threshold_params(4, 4, (50, 100), seed=3)
    assert enumerate_structure(full) == S(4, {1, 2, 3, 4})
    with pytest.raises(ValueError):
        gen_threshold_params(4, 3)
    with pytest.raises(SearchExhausted):
        gen_threshold_params(3, 5, (5, 5), seed=0, max_attempts=3)


def test_gen_threshold_deterministic():
    assert gen_threshold_params(3, 5, seed=9) == gen_threshold_params(3, 5, seed=9)


def test_weighted_representation(weighted_params, ej2_params):
    w = weighted_representation(weighted_params)
    assert w.structure() == WeightedThreshold((1, 1, 2), 3).structure()
    assert w.structure() == enumerate_structure(weighted_params)
    assert weighted_representation(ej2_params).structure() == threshold_structure(2, 3)
    single = weighted_representation(SchemeParams((G(4, 1),), 1, 17))
    assert single.norms == (17,) and single.m_plus == 17
    assert single.weights()[0] == pytest.approx(single.threshold())


def test_weighted_requires_coprime():
    p = realize_with(S(3, {1, 3}, {2, 3}), [G(3), G(3, 2)])
    with pytest.raises(NotPairwiseCoprime):
        weighted_representation(p)


def test_weighted_threshold_validation():
    with pytest.raises(ValueError):
        WeightedThreshold((1, 0), 1)
