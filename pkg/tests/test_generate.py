import numpy as np
import pytest

from linrel import relation as rel
from linrel import subspace as sub
from linrel.generate import CLASSES, RandomSpec, corner_cases, random_relation, random_subspace, trial_seed


def test_deterministic():
    for cls in CLASSES:
        a = random_relation(RandomSpec(6, cls, 42, "complex"))
        b = random_relation(RandomSpec(6, cls, 42, "complex"))
        np.testing.assert_array_equal(a.basis, b.basis)


def test_trial_seed():
    assert trial_seed(0, 1) == trial_seed(0, 1)
    assert len({trial_seed(0, i) for i in range(100)}) == 100
    assert trial_seed(0, 1) != trial_seed(1, 1)


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("fld", ["real", "complex"])
def test_class_properties(seed, fld):
    spec = lambda c: RandomSpec(6, c, seed, fld)  # noqa: E731
    T = random_relation(spec("operator"))
    assert rel.is_operator(T)
    T = random_relation(spec("everywhere-defined-operator"))
    assert rel.is_operator(T) and T.parts.dom.dim == T.dim_h
    T = random_relation(spec("self-adjoint"))
    assert rel.is_selfadjoint(T)
    T = random_relation(spec("pure-multivalued"))
    assert T.parts.dom.dim == 0
    T = random_relation(spec("singular-product"))
    p = T.parts
    assert rel.equals(T, rel.product(p.dom, p.ran))
    for c in CLASSES:
        assert random_relation(spec(c)).field_tag == fld
        assert max(random_relation(spec(c)).dim_h, random_relation(spec(c)).dim_k) <= 6


def test_dims_cover_range():
    dims = {random_relation(RandomSpec(3, "generic", s)).dim_h for s in range(60)}
    assert dims == {0, 1, 2, 3}


def test_real_field_is_real():
    T = random_relation(RandomSpec(5, "generic", 3, "real"))
    assert not np.iscomplexobj(T.basis)


def test_random_subspace_dim(rng):
    U = random_subspace(rng, 5, "real", dim=3)
    assert U.dim == 3 and U.ambient_dim == 5


def test_corner_cases():
    cases = corner_cases("real")
    assert cases["zero_0x0"].dim == 0
    assert cases["full_2x3"].dim == 5
    # (H x K)* = {0} x {0} and {0}* = K x H
    assert cases["full_2x3"].adjoint.dim == 0
    assert cases["zero_2x3"].adjoint.dim == 5


@pytest.mark.parametrize("kw, match", [
    (dict(max_dim=-1), "max_dim"), (dict(max_dim=2, cls="weird"), "class"),
    (dict(max_dim=2, field="p-adic"), "field"),
])
def test_spec_validation(kw, match):
    with pytest.raises(ValueError, match=match):
        RandomSpec(**kw)
