import itertools
from fractions import Fraction

import pytest

from hopfsmith import GF, QQ, FieldSpec, augmentation_ideal, resolve_preset
from hopfsmith.filtration import (FiltrationRecord, coradical, is_nilpotent_ideal,
                                  is_subcoalgebra, radical, wedge, wedge_filtration)
from hopfsmith.hopf import SubspaceBasis
from hopfsmith.linalg import spans_equal
from hopfsmith.presets import preset_sweedler, preset_taft

from conftest import F


def test_radical_semisimple_group_algebras():
    assert radical(resolve_preset("group:C2", QQ).alg).dim == 0
    assert radical(resolve_preset("group:S3", QQ).alg).dim == 0
    assert radical(resolve_preset("group:C3", GF(2)).alg).dim == 0


def test_radical_modular_group_algebras():
    r = radical(resolve_preset("group:C2", GF(2)).alg)
    assert r.dim == 1 and r.contains(GF(2), [1, 1])
    assert radical(resolve_preset("group:C4", GF(2)).alg).dim == 3
    assert radical(resolve_preset("group:C6", GF(2)).alg).dim == 3
    assert radical(resolve_preset("group:C6", GF(3)).alg).dim == 4
    # the matrix-block case: F2[S3] has a one-dimensional radical
    assert radical(resolve_preset("group:S3", GF(2)).alg).dim == 1
    assert radical(resolve_preset("group:S3", GF(3)).alg).dim == 4


def test_radical_sweedler():
    h4 = preset_sweedler(QQ)
    r = radical(h4.alg)
    assert r.dim == 2
    assert r.contains(QQ, [F(0), F(0), F(1), F(0)])
    assert r.contains(QQ, [F(0), F(0), F(0), F(1)])


def test_radical_taft():
    r = radical(preset_taft(3, 2, GF(7)).alg)
    assert r.dim == 6  # the ideal generated by x


def test_coradical_examples():
    h4 = preset_sweedler(QQ)
    cor = coradical(h4.coa)
    assert cor.dim == 2
    assert cor.contains(QQ, [F(1), F(0), F(0), F(0)])
    assert cor.contains(QQ, [F(0), F(1), F(0), F(0)])
    # group algebras are pointed with every basis vector group-like
    for spec, ch in [("group:C3", 0), ("group:C3", 3), ("group:C4", 2)]:
        h = resolve_preset(spec, FieldSpec(ch))
        assert coradical(h.coa).dim == h.dim
    triv = resolve_preset("group:C1", QQ)
    assert coradical(triv.coa).dim == 1


def test_coradical_function_algebra_modular():
    h = resolve_preset("functions:C2", GF(2))
    cor = coradical(h.coa)
    assert cor.dim == 1
    assert cor.contains(GF(2), [1, 1])


def test_wedge_basic_identities():
    h4 = preset_sweedler(QQ)
    cor = coradical(h4.coa)
    assert wedge(cor, cor, h4.coa).dim == 4
    hc2 = resolve_preset("group:C2", QQ)
    zero = SubspaceBasis(2, [])
    assert wedge(zero, zero, hc2.coa).dim == 0  # Delta is injective
    full = SubspaceBasis(4, [h4.basis_vec(i) for i in range(4)])
    assert wedge(cor, full, h4.coa).dim == 4
    assert wedge(full, cor, h4.coa).dim == 4


def test_wedge_contains_sum():
    h4 = preset_sweedler(QQ)
    one = SubspaceBasis(4, [h4.unit_vec])
    g = SubspaceBasis(4, [h4.basis_vec(1)])
    w = wedge(one, g, h4.coa)
    for v in one.vectors + g.vectors:
        assert w.contains(QQ, v)


def _grouplike_subcoalgebras(h, indices_pool):
    out = []
    for r in range(1, len(indices_pool) + 1):
        for subset in itertools.combinations(indices_pool, r):
            out.append(SubspaceBasis(h.dim, [h.basis_vec(i) for i in subset]))
    return out


def test_wedge_associativity_on_subcoalgebra_triples():
    h = resolve_preset("group:C4", QQ)
    subs = _grouplike_subcoalgebras(h, range(4))[:6]
    for x, y, z in itertools.islice(itertools.product(subs, repeat=3), 0, 27, 4):
        lhs = wedge(wedge(x, y, h.coa), z, h.coa)
        rhs = wedge(x, wedge(y, z, h.coa), h.coa)
        assert spans_equal(QQ, lhs.vectors, rhs.vectors)


def test_wedge_of_subcoalgebras_is_subcoalgebra():
    h4 = preset_sweedler(QQ)
    one = SubspaceBasis(4, [h4.unit_vec])
    g = SubspaceBasis(4, [h4.basis_vec(1)])
    w = wedge(one, g, h4.coa)
    assert is_subcoalgebra(w, h4.coa)


def test_filtration_of_sweedler_coradical():
    h4 = preset_sweedler(QQ)
    rec = wedge_filtration(coradical(h4.coa), h4.coa)
    assert [s.dim for s in rec.stages] == [2, 4]
    assert rec.exhausted and rec.stabilization_index == 2


def test_filtration_not_exhausted_without_coradical():
    h4 = preset_sweedler(QQ)
    one = SubspaceBasis(4, [h4.unit_vec])
    rec = wedge_filtration(one, h4.coa)
    assert not rec.exhausted


def test_filtration_full_start():
    h4 = preset_sweedler(QQ)
    full = SubspaceBasis(4, [h4.basis_vec(i) for i in range(4)])
    rec = wedge_filtration(full, h4.coa)
    assert rec.exhausted and rec.stabilization_index == 1


def test_exhaustion_criterion_both_directions():
    # >= 10 subcoalgebra instances; exhausted iff the coradical is contained
    instances = []
    h4 = preset_sweedler(QQ)
    cor4 = coradical(h4.coa)
    instances.append((h4, SubspaceBasis(4, [h4.unit_vec]), False))
    instances.append((h4, cor4, True))
    instances.append((h4, SubspaceBasis(4, [h4.basis_vec(0), h4.basis_vec(1),
                                            h4.basis_vec(2)]), True))
    instances.append((h4, SubspaceBasis(4, [h4.basis_vec(i) for i in range(4)]), True))
    hc4 = resolve_preset("group:C4", QQ)
    instances.append((hc4, SubspaceBasis(4, [hc4.basis_vec(0)]), False))
    instances.append((hc4, SubspaceBasis(4, [hc4.basis_vec(0), hc4.basis_vec(2)]), False))
    instances.append((hc4, SubspaceBasis(4, [hc4.basis_vec(i) for i in range(4)]), True))
    hc2m = resolve_preset("group:C2", GF(2))
    instances.append((hc2m, SubspaceBasis(2, [hc2m.basis_vec(0)]), False))
    instances.append((hc2m, SubspaceBasis(2, [hc2m.basis_vec(0), hc2m.basis_vec(1)]), True))
    kf2 = resolve_preset("functions:C2", GF(2))
    instances.append((kf2, SubspaceBasis(2, [kf2.alg.unit]), True))  # span{1} = coradical here
    kf3 = resolve_preset("functions:C3", QQ)
    instances.append((kf3, SubspaceBasis(3, [kf3.alg.unit]), False))
    assert len(instances) >= 10
    for h, sub, want in instances:
        rec = wedge_filtration(sub, h.coa)
        corad = coradical(h.coa)
        contained = all(sub.contains(h.field, v) for v in corad.vectors)
        assert rec.exhausted == want == contained


def test_span_one_in_sweedler_is_subcoalgebra_check():
    h4 = preset_sweedler(QQ)
    assert is_subcoalgebra(SubspaceBasis(4, [h4.unit_vec]), h4.coa)
    # span{x} is not a subcoalgebra: Delta(x) = x(x)1 + g(x)x
    assert not is_subcoalgebra(SubspaceBasis(4, [h4.basis_vec(2)]), h4.coa)


def test_filtration_rejects_non_subcoalgebra():
    h4 = preset_sweedler(QQ)
    with pytest.raises(ValueError):
        wedge_filtration(SubspaceBasis(4, [h4.basis_vec(2)]), h4.coa)


def test_nilpotent_ideal_examples():
    h4 = preset_sweedler(QQ)
    assert is_nilpotent_ideal(radical(h4.alg), h4.alg) == 2
    hm = resolve_preset("group:C2", GF(2))
    assert is_nilpotent_ideal(augmentation_ideal(hm), hm.alg) == 2
    full = SubspaceBasis(2, [hm.basis_vec(0), hm.basis_vec(1)])
    assert is_nilpotent_ideal(full, hm.alg) is None  # contains 1
    with pytest.raises(ValueError):
        is_nilpotent_ideal(SubspaceBasis(4, [h4.basis_vec(1)]), h4.alg)


def test_nilpotency_index_of_larger_modular_radical():
    a = resolve_preset("group:C4", GF(2)).alg
    r = radical(a)
    assert is_nilpotent_ideal(r, a) == 4  # (1-g)^3 != 0, (1-g)^4 = 0
