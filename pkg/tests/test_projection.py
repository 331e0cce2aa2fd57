import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import ortho_group

from localdepth.data import Dataset, Grid
from localdepth.projection import (
    Direction,
    DirectionSet,
    ProjectionSpec,
    Projector,
    project,
    sample_direction,
    sample_directions,
)

SPHERE = ProjectionSpec(20, 5, "sphere")
BROWNIAN = ProjectionSpec(20, 5, "brownian")


def test_grid_trapezoid_weights():
    g = Grid.from_points([0.0, 0.5, 2.0])
    assert list(g.w) == [0.25, 1.0, 0.75]
    assert g.w.sum() == pytest.approx(2.0)


@pytest.mark.parametrize("t", [[0, 0, 1], [1, 0.5, 2], [0.0]])
def test_grid_rejects_bad_abscissae(t):
    with pytest.raises(ValueError):
        Grid.from_points(t)


def test_spec_validation():
    with pytest.raises(ValueError):
        ProjectionSpec(0)
    with pytest.raises(ValueError):
        ProjectionSpec(3, kind="gaussian")


def test_sphere_d1_is_a_sign():
    spec = ProjectionSpec(40, 1, "sphere")
    vals = {float(sample_direction(spec, i, dim=1).vec[0]) for i in range(40)}
    assert vals == {1.0, -1.0}


@given(st.integers(1, 60), st.integers(0, 2**63), st.integers(0, 19))
@settings(max_examples=100, deadline=None)
def test_sphere_unit_norm(d, seed, index):
    v = sample_direction(ProjectionSpec(20, seed, "sphere"), index, dim=d).vec
    assert abs(np.linalg.norm(v) - 1.0) <= 1e-12


def test_index_out_of_range():
    with pytest.raises(IndexError):
        sample_direction(SPHERE, 20, dim=3)


def test_sampling_needs_shape():
    with pytest.raises(ValueError):
        sample_direction(SPHERE, 0)
    with pytest.raises(ValueError):
        sample_direction(BROWNIAN, 0)


def test_brownian_starts_at_zero():
    grid = Grid.equispaced(0, 3, 31)
    d = sample_direction(BROWNIAN, 4, grid=grid, channels=2)
    assert d.curve_weights.shape == (2, 31)
    assert np.all(d.curve_weights[:, 0] == 0.0)


def test_brownian_terminal_variance():
    # irregular grid on [0, 2]; Var W(t_m) = t_m - t_1
    grid = Grid.from_points(np.sort(np.r_[0.0, 2.0, np.random.default_rng(0).uniform(0, 2, 40)]))
    ends = np.array([
        sample_direction(ProjectionSpec(1, s, "brownian"), 0, grid=grid).curve_weights[0, -1]
        for s in range(10_000)
    ])
    assert ends.var() == pytest.approx(2.0, rel=0.05)


def test_directions_are_counter_based():
    grid = Grid.equispaced(0, 1, 11)
    a = sample_direction(ProjectionSpec(50, 9, "mixed"), 17, dim=4, grid=grid)
    b = sample_direction(ProjectionSpec(80, 9, "mixed"), 17, dim=4, grid=grid)
    assert np.array_equal(a.vec, b.vec)
    assert np.array_equal(a.curve_weights, b.curve_weights)
    c = sample_direction(ProjectionSpec(50, 10, "mixed"), 17, dim=4, grid=grid)
    assert not np.array_equal(a.vec, c.vec)


def test_sample_directions_match_single_draws():
    data = Dataset(vectors=np.zeros((3, 4)))
    dirs = sample_directions(ProjectionSpec(6, 2), data)
    assert dirs.kind == "sphere" and dirs.n == 6
    for i in (5, 0, 3):
        assert np.array_equal(dirs[i].vec, sample_direction(ProjectionSpec(6, 2, "sphere"), i, dim=4).vec)


def test_spec_kind_must_match_data():
    with pytest.raises(ValueError):
        ProjectionSpec(3, 0, "brownian").resolve(Dataset(vectors=np.zeros((2, 2))))


# --- project ----------------------------------------------------------------

def test_project_sphere_example():
    assert project([3.0, 4.0], Direction("sphere", np.array([1.0, 0.0]))) == 3.0


def test_project_brownian_zero_curve():
    grid = Grid.equispaced(0, 1, 21)
    d = sample_direction(BROWNIAN, 0, grid=grid)
    assert project(np.zeros(21), d, grid) == 0.0


def test_project_brownian_two_point_grid():
    grid = Grid.from_points([0.0, 1.0])
    d = Direction("brownian", curve_weights=np.ones((1, 2)))
    assert project(np.ones(2), d, grid) == 1.0


def test_project_shape_mismatch():
    with pytest.raises(ValueError):
        project([1.0, 2.0, 3.0], Direction("sphere", np.array([1.0, 0.0])))
    grid = Grid.equispaced(0, 1, 5)
    with pytest.raises(ValueError):
        project(np.ones(4), Direction("brownian", curve_weights=np.ones((1, 5))), grid)


def test_project_mixed_needs_reference():
    with pytest.raises(ValueError):
        project([1.0], Direction("mixed", np.array([1.0]), np.ones((1, 2))))


vec3 = st.lists(st.floats(-100, 100), min_size=3, max_size=3).map(np.array)
coef = st.floats(-10, 10)


@given(vec3, vec3, coef, coef, st.integers(0, 19))
@settings(max_examples=100, deadline=None)
def test_linearity_sphere(x, y, a, b, i):
    d = sample_direction(SPHERE, i, dim=3)
    lhs = project(a * x + b * y, d)
    rhs = a * project(x, d) + b * project(y, d)
    scale = abs(a) * np.abs(x).sum() + abs(b) * np.abs(y).sum() + 1.0
    assert abs(lhs - rhs) <= 1e-10 * scale


def test_linearity_brownian():
    grid = Grid.equispaced(0, 2 * np.pi, 101)
    rng = np.random.default_rng(4)
    for i in range(20):
        d = sample_direction(BROWNIAN, i, grid=grid)
        x, y = rng.normal(size=101), rng.normal(size=101)
        a, b = rng.normal(size=2)
        lhs = project(a * x + b * y, d, grid)
        rhs = a * project(x, d, grid) + b * project(y, d, grid)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


def test_orthogonal_equivariance():
    rng = np.random.default_rng(8)
    for d in (2, 5, 9):
        A = ortho_group.rvs(d, random_state=rng)
        x = rng.normal(size=d)
        dirn = sample_direction(SPHERE, 3, dim=d)
        moved = Direction("sphere", A @ dirn.vec)
        assert project(A @ x, moved) == pytest.approx(project(x, dirn), abs=1e-10)


# --- projector --------------------------------------------------------------

def test_projector_matches_project():
    rng = np.random.default_rng(2)
    grid = Grid.equispaced(0, 1, 15)
    data = Dataset(curves=rng.normal(size=(7, 2, 15)), grid=grid)
    dirs = sample_directions(ProjectionSpec(4, 1), data)
    P = Projector(dirs, data).transform(data)
    assert P.shape == (4, 7)
    for i in range(4):
        for j in range(7):
            assert P[i, j] == pytest.approx(project(data.curves[j], dirs[i], grid), rel=1e-12)


def test_mixed_projection_is_standardized_average():
    rng = np.random.default_rng(6)
    grid = Grid.equispaced(0, 1, 9)
    ref = Dataset(vectors=rng.normal(size=(31, 3)) * 100,
                  curves=rng.normal(size=(31, 9)), grid=grid)
    dirs = sample_directions(ProjectionSpec(5, 3), ref)
    P = Projector(dirs, ref).transform(ref)
    for i in range(5):
        pv = ref.vectors @ dirs.vecs[i]
        pc = np.array([project(c, Direction("brownian", curve_weights=dirs.paths[i]), grid)
                       for c in ref.curves])
        zv = (pv - np.median(pv)) / np.median(np.abs(pv - np.median(pv)))
        zc = (pc - np.median(pc)) / np.median(np.abs(pc - np.median(pc)))
        assert np.allclose(P[i], 0.5 * zv + 0.5 * zc, rtol=1e-10, atol=1e-12)
        # each standardized block has median 0 and MAD 1 on the reference
        assert np.median(2 * P[i] - zc) == pytest.approx(0.0, abs=1e-12)


def test_mixed_constant_block_does_not_blow_up():
    grid = Grid.equispaced(0, 1, 5)
    ref = Dataset(vectors=np.ones((6, 2)), curves=np.random.default_rng(0).normal(size=(6, 5)), grid=grid)
    P = Projector(sample_directions(ProjectionSpec(3, 0), ref), ref).transform(ref)
    assert np.all(np.isfinite(P))


def test_direction_set_stack_roundtrip():
    ds = [sample_direction(SPHERE, i, dim=3) for i in range(4)]
    s = DirectionSet.stack(ds)
    assert s.n == 4
    assert np.array_equal(s[2].vec, ds[2].vec)
