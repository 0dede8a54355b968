import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liemech.errors import (
    InvariantViolation,
    NearAngleLimit,
    NotSkew,
    NotUnitAxis,
    OutOfTrustRegion,
    UnknownGroup,
    ZeroInput,
)
from liemech.groups import (
    GalileiTransform,
    Pose2,
    Pose3,
    Rotation2,
    Rotation3,
    Twist,
    ad_so3,
    adjoint_conjugation_check,
    bch3,
    catalog_lookup,
    euler_angles_to_rotation,
    exp_se3,
    exp_so3,
    galilei_apply,
    galilei_compose,
    hat3,
    log_se3,
    log_so3,
    matrix_exp,
    momentum_map_so2,
    quaternion_from_axis_angle,
    quaternion_from_rotation,
    rot_x,
    se2_adjoint,
    se2_bracket,
    se2_coadjoint,
    se2_pairing,
    se3_adjoint,
    se3_bracket,
    so2_generator_field,
    stereographic_transition,
    vee3,
)
from oracles import (
    commutator,
    random_rotation,
    se2_group_matrix,
    se2_matrix,
    series_expm,
    skew,
    twist_matrix,
)

vec3 = st.lists(st.floats(-2, 2), min_size=3, max_size=3).map(np.array)


# --- hat / vee ---------------------------------------------------------------

def test_hat3_layout():
    np.testing.assert_array_equal(hat3([1, 2, 3]), [[0, -3, 2], [3, 0, -1], [-2, 1, 0]])
    np.testing.assert_array_equal(hat3([0, 0, 0]), np.zeros((3, 3)))
    np.testing.assert_array_equal(hat3([1, 2, 3]) @ [1, 2, 3], [0, 0, 0])


@given(vec3, vec3)
def test_hat3_is_cross_product(w, x):
    W = hat3(w)
    np.testing.assert_allclose(W @ x, np.cross(w, x), atol=1e-12)
    np.testing.assert_array_equal(W, -W.T)
    np.testing.assert_array_equal(vee3(W), w)


def test_vee3():
    np.testing.assert_array_equal(vee3([[0, -3, 2], [3, 0, -1], [-2, 1, 0]]), [1, 2, 3])
    np.testing.assert_array_equal(vee3(np.zeros((3, 3))), [0, 0, 0])
    with pytest.raises(NotSkew):
        vee3(np.eye(3))


# --- exp / log on SO(3) --------------------------------------------------------

def test_exp_so3_examples():
    np.testing.assert_array_equal(exp_so3([0, 0, 0]), np.eye(3))
    r = exp_so3([0, 0, math.pi / 2])
    np.testing.assert_allclose(r, series_expm(skew([0, 0, math.pi / 2])), atol=1e-12)
    np.testing.assert_allclose(r[:2, :2], [[0, -1], [1, 0]], atol=1e-15)
    w = np.array([0.3, -0.2, 0.1])
    np.testing.assert_allclose(exp_so3(w), series_expm(skew(w)), atol=1e-12)


@pytest.mark.parametrize("scale", [1e-9, 1e-6, 5e-5, 0.99e-4, 1.01e-4, 1e-3])
def test_exp_so3_continuous_across_taylor_switch(scale):
    w = scale * np.array([0.6, -0.8, 0.0])
    np.testing.assert_allclose(exp_so3(w), series_expm(skew(w)), atol=1e-15)


def test_rodrigues_forms_agree():
    # half-angle sine form (used) vs the (1 - cos) form, the latter in 40-digit arithmetic
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 40
    from liemech.groups.so3 import rodrigues_coefficients
    for theta in np.concatenate([np.geomspace(1e-8, 1e-3, 50), np.linspace(1e-3, math.pi, 500)]):
        _, b = rodrigues_coefficients(theta)
        t = mpmath.mpf(float(theta))
        assert abs(b - float((1 - mpmath.cos(t)) / t ** 2)) < 1e-13


def test_log_so3_examples():
    np.testing.assert_array_equal(log_so3(np.eye(3)), [0, 0, 0])
    np.testing.assert_allclose(log_so3(exp_so3([0.1, 0.2, 0.3])), [0.1, 0.2, 0.3], atol=1e-10)
    with pytest.raises(NearAngleLimit):
        log_so3(exp_so3([0, 0, math.pi]))


@pytest.mark.parametrize("angle", [1e-8, 1e-5, 0.5, 2.0, 2.9, 3.1, math.pi - 2e-3])
def test_log_so3_round_trip_all_branches(angle):
    axis = np.array([1.0, -2.0, 0.5]) / np.linalg.norm([1.0, -2.0, 0.5])
    w = angle * axis
    r = exp_so3(w)
    np.testing.assert_allclose(log_so3(r), w, atol=1e-10)
    np.testing.assert_allclose(exp_so3(log_so3(r)), r, atol=1e-10)
    assert np.linalg.norm(log_so3(r)) <= math.pi


@settings(max_examples=200)
@given(vec3)
def test_exp_so3_is_rotation(w):
    r = exp_so3(w)
    np.testing.assert_allclose(r.T @ r, np.eye(3), atol=1e-12)
    assert abs(np.linalg.det(r) - 1) < 1e-12


def test_one_parameter_subgroup(rng):
    for _ in range(200):
        xi = rng.normal(size=3)
        s, t = rng.uniform(-1, 1, size=2)
        np.testing.assert_allclose(exp_so3((s + t) * xi), exp_so3(s * xi) @ exp_so3(t * xi), atol=1e-10)
        tw = Twist(rng.normal(size=3), rng.normal(size=3))
        lhs = exp_se3((s + t) * tw).as_matrix()
        rhs = exp_se3(s * tw).as_matrix() @ exp_se3(t * tw).as_matrix()
        np.testing.assert_allclose(lhs, rhs, atol=1e-10)


def test_rotation3_validates():
    with pytest.raises(InvariantViolation):
        Rotation3(np.diag([1.0, 1.0, -1.0]))
    with pytest.raises(InvariantViolation):
        Rotation3(2 * np.eye(3))
    r = Rotation3.exp([0.1, 0.2, 0.3])
    np.testing.assert_allclose((r @ r.inverse()).m, np.eye(3), atol=1e-12)
    assert not r.m.flags.writeable


def test_so3_trace_identity(rng):
    for _ in range(100):
        u, v = rng.normal(size=(2, 3))
        assert abs(u @ v + 0.5 * np.trace(hat3(u) @ hat3(v))) < 1e-13


# --- SE(3) ------------------------------------------------------------------

def test_exp_se3_examples():
    g = exp_se3(Twist([0, 0, 0], [1, 2, 3]))
    np.testing.assert_array_equal(g.rot, np.eye(3))
    np.testing.assert_array_equal(g.p, [1, 2, 3])
    g = exp_se3(Twist([1e-9, 0, 0], [1, 0, 0]))
    assert np.linalg.norm(g.p - [1, 0, 0]) < 1e-9
    tw = Twist([0, 0, math.pi / 2], [1, 0, 0])
    np.testing.assert_allclose(exp_se3(tw).as_matrix(), series_expm(twist_matrix(tw.w, tw.v)), atol=1e-12)


def test_log_se3_examples():
    t = log_se3(Pose3())
    np.testing.assert_array_equal(t.as_vector(), np.zeros(6))
    tw = Twist([0.1, 0.2, 0.3], [1, -1, 0.5])
    g = exp_se3(tw)
    np.testing.assert_allclose(exp_se3(log_se3(g)).as_matrix(), g.as_matrix(), atol=1e-10)
    np.testing.assert_allclose(log_se3(g).as_vector(), tw.as_vector(), atol=1e-10)
    t = log_se3(Pose3(np.eye(3), [4, 5, 6]))
    np.testing.assert_array_equal(t.w, [0, 0, 0])
    np.testing.assert_allclose(t.v, [4, 5, 6], atol=1e-15)
    with pytest.raises(NearAngleLimit):
        log_se3(Pose3(exp_so3([math.pi, 0, 0]), [1, 0, 0]))


def test_pose3_group_axioms(rng):
    def rand_pose():
        return Pose3(random_rotation(rng), rng.normal(size=3))

    for _ in range(100):
        g, h, k = rand_pose(), rand_pose(), rand_pose()
        np.testing.assert_allclose(((g @ h) @ k).as_matrix(), (g @ (h @ k)).as_matrix(), atol=1e-12)
        np.testing.assert_allclose((g @ g.inverse()).as_matrix(), np.eye(4), atol=1e-12)
        np.testing.assert_allclose((g.inverse() @ g).as_matrix(), np.eye(4), atol=1e-12)
        np.testing.assert_allclose((Pose3.identity() @ g).as_matrix(), g.as_matrix(), atol=0)
        q = rng.normal(size=3)
        np.testing.assert_allclose((g @ h).act(q), g.act(h.act(q)), atol=1e-12)
        np.testing.assert_allclose(g.as_matrix()[3], [0, 0, 0, 1])


def test_se3_bracket_examples():
    e1, e2, e3, z = np.eye(3)[0], np.eye(3)[1], np.eye(3)[2], np.zeros(3)
    b = se3_bracket(Twist(e3, z), Twist(e1, z))
    np.testing.assert_array_equal(b.w, e2)
    np.testing.assert_array_equal(b.v, z)
    oracle = commutator(twist_matrix(e3, z), twist_matrix(e1, z))
    np.testing.assert_array_equal(Twist.from_matrix(oracle).w, e2)
    a = Twist([1, 2, 3], [4, 5, 6])
    np.testing.assert_array_equal(se3_bracket(a, a).as_vector(), np.zeros(6))
    np.testing.assert_array_equal(se3_bracket(Twist(z, [1, 2, 3]), Twist(z, [3, 1, 2])).as_vector(), np.zeros(6))


def test_se3_bracket_is_commutator(rng):
    for _ in range(200):
        a = Twist(*rng.normal(size=(2, 3)))
        b = Twist(*rng.normal(size=(2, 3)))
        expect = commutator(twist_matrix(a.w, a.v), twist_matrix(b.w, b.v))
        np.testing.assert_allclose(se3_bracket(a, b).as_matrix(), expect, atol=1e-13)
        np.testing.assert_allclose(se3_bracket(a, b).as_vector(), -se3_bracket(b, a).as_vector(), atol=0)


def test_se3_adjoint_is_conjugation(rng):
    for _ in range(50):
        g = Pose3(random_rotation(rng), rng.normal(size=3))
        t = Twist(*rng.normal(size=(2, 3)))
        expect = g.as_matrix() @ t.as_matrix() @ np.linalg.inv(g.as_matrix())
        np.testing.assert_allclose(se3_adjoint(g, t).as_matrix(), expect, atol=1e-12)


# --- SE(2) ------------------------------------------------------------------

def _se2_from_matrix(m):
    return m[1, 0], m[:2, 2]


def test_se2_bracket_examples():
    x = (0.7, np.array([1.0, -2.0]))
    xi, v = se2_bracket(x, x)
    assert xi == 0 and np.all(v == 0)
    xi, v = se2_bracket((1.0, np.zeros(2)), (0.0, np.array([1.0, 0.0])))
    oracle = commutator(se2_matrix(1.0, [0, 0]), se2_matrix(0.0, [1, 0]))
    np.testing.assert_allclose(v, _se2_from_matrix(oracle)[1], atol=1e-15)
    np.testing.assert_allclose(v, [0, 1], atol=0)
    a, b = (0.3, np.array([1.0, 2.0])), (-1.1, np.array([0.5, -0.4]))
    ab, ba = se2_bracket(a, b), se2_bracket(b, a)
    np.testing.assert_allclose(ab[1], -ba[1], atol=0)


def test_se2_bracket_is_commutator(rng):
    for _ in range(100):
        a = (rng.normal(), rng.normal(size=2))
        b = (rng.normal(), rng.normal(size=2))
        oracle = commutator(se2_matrix(*a), se2_matrix(*b))
        xi, v = se2_bracket(a, b)
        assert abs(xi - oracle[1, 0]) < 1e-13
        np.testing.assert_allclose(v, oracle[:2, 2], atol=1e-13)


def test_se2_adjoint_examples():
    x = (0.4, np.array([1.0, 2.0]))
    xi, v = se2_adjoint(Pose2(), x)
    assert xi == 0.4 and np.allclose(v, x[1], atol=0)
    xi, v = se2_adjoint(Pose2(0.0, [1.0, 0.0]), (1.0, np.zeros(2)))
    assert xi == 1.0
    np.testing.assert_allclose(v, [0, -1], atol=0)
    g = se2_group_matrix(0.0, [1.0, 0.0])
    oracle = g @ se2_matrix(1.0, [0, 0]) @ np.linalg.inv(g)
    np.testing.assert_allclose(v, oracle[:2, 2], atol=1e-15)
    xi, v = se2_adjoint(Pose2(math.pi / 2, [0.0, 0.0]), (0.0, np.array([1.0, 0.0])))
    np.testing.assert_allclose(v, [0, 1], atol=1e-15)


def test_se2_coadjoint_examples(rng):
    m = (0.3, np.array([3.0, 4.0]))
    mu, alpha = se2_coadjoint(Pose2(), m)
    assert mu == 0.3 and np.allclose(alpha, m[1], atol=0)
    for _ in range(20):
        g = Pose2(rng.uniform(-4, 4), rng.normal(size=2))
        _, alpha = se2_coadjoint(g, m)
        assert abs(np.linalg.norm(alpha) - 5.0) < 1e-12


def test_se2_coadjoint_pairing_invariance(rng):
    for _ in range(200):
        g = Pose2(rng.uniform(-4, 4), rng.normal(size=2))
        m = (rng.normal(), rng.normal(size=2))
        x = (rng.normal(), rng.normal(size=2))
        lhs = se2_pairing(se2_coadjoint(g, m), se2_adjoint(g, x))
        assert abs(lhs - se2_pairing(m, x)) < 1e-12


def test_pose2_group_axioms(rng):
    for _ in range(100):
        g, h, k = (Pose2(rng.uniform(-4, 4), rng.normal(size=2)) for _ in range(3))
        np.testing.assert_allclose(((g @ h) @ k).as_matrix(), (g @ (h @ k)).as_matrix(), atol=1e-12)
        np.testing.assert_allclose((g @ g.inverse()).as_matrix(), np.eye(3), atol=1e-12)
        np.testing.assert_allclose((g @ h).as_matrix(), g.as_matrix() @ h.as_matrix(), atol=1e-12)
        inv = g.inverse()
        np.testing.assert_allclose(inv.as_matrix(), np.linalg.inv(g.as_matrix()), atol=1e-12)


def test_rotation2_canonical():
    assert Rotation2(math.pi).theta == math.pi
    assert Rotation2(-math.pi).theta == math.pi
    assert abs(Rotation2(3 * math.pi / 2).theta + math.pi / 2) < 1e-15
    r = Rotation2(2.0).compose(Rotation2(2.5))
    assert abs(r.theta - (4.5 - 2 * math.pi)) < 1e-15
    np.testing.assert_allclose(Rotation2(0.3).matrix().T @ Rotation2(0.3).matrix(), np.eye(2), atol=1e-15)


# --- so(3) brackets, adjoint, BCH -------------------------------------------------

def test_ad_so3_examples(rng):
    np.testing.assert_array_equal(ad_so3([1, 0, 0], [0, 1, 0]), [0, 0, 1])
    np.testing.assert_array_equal(ad_so3([1, 2, 3], [1, 2, 3]), [0, 0, 0])
    for _ in range(100):
        u, v = rng.normal(size=(2, 3))
        np.testing.assert_allclose(ad_so3(u, v), vee3(commutator(hat3(u), hat3(v))), atol=1e-13)


def test_adjoint_conjugation_check(rng):
    assert adjoint_conjugation_check(np.eye(3), [0.3, -1.0, 2.0]) < 1e-15
    assert adjoint_conjugation_check(exp_so3([0, 0, math.pi / 3]), [1, 0, 0]) <= 1e-10
    g = random_rotation(rng)
    assert adjoint_conjugation_check(g, [0, 0, 0]) == 0.0
    for _ in range(50):
        assert adjoint_conjugation_check(random_rotation(rng), rng.normal(size=3)) <= 1e-10


def test_adjoint_derivative_is_bracket(rng):
    t = 1e-6
    for _ in range(50):
        xi, eta = rng.normal(size=(2, 3))
        xi /= np.linalg.norm(xi)
        eta /= np.linalg.norm(eta)
        slope = (exp_so3(t * xi) @ eta - eta) / t
        np.testing.assert_allclose(slope, ad_so3(xi, eta), atol=1e-5)


def test_bch3_examples():
    np.testing.assert_allclose(bch3([0.1, 0, 0], [0.2, 0, 0]), [0.3, 0, 0], atol=1e-16)
    np.testing.assert_array_equal(bch3([0.1, 0.2, 0.3], [0, 0, 0]), [0.1, 0.2, 0.3])
    u, v = np.array([0.05, 0, 0]), np.array([0, 0.05, 0])
    oracle = log_so3(exp_so3(u) @ exp_so3(v))
    assert np.linalg.norm(bch3(u, v) - oracle) < 1e-5
    with pytest.raises(OutOfTrustRegion):
        bch3([0.6, 0, 0], [0, 0, 0])


def test_bch3_error_is_fourth_order():
    u, v = np.array([1.0, 0.2, 0]), np.array([0, 1.0, -0.4])
    errs = [np.linalg.norm(bch3(s * u, s * v) - log_so3(exp_so3(s * u) @ exp_so3(s * v)))
            for s in (0.2, 0.1)]
    assert 10 < errs[0] / errs[1] < 40


# --- quaternions, Euler angles ----------------------------------------------------

def test_quaternion_examples():
    q = quaternion_from_axis_angle([0, 0, 1], 0.0)
    assert q.scalar == 1.0 and np.all(q.vector == 0)
    q = quaternion_from_axis_angle([0, 0, 1], math.pi)
    assert abs(q.scalar) < 1e-16
    np.testing.assert_allclose(q.vector, [0, 0, 1], atol=0)
    q = quaternion_from_axis_angle([1, 0, 0], math.pi / 2)
    np.testing.assert_allclose(q.to_rotation(), rot_x(math.pi / 2), atol=1e-12)
    np.testing.assert_allclose(q.to_rotation(), exp_so3([math.pi / 2, 0, 0]), atol=1e-12)
    with pytest.raises(NotUnitAxis):
        quaternion_from_axis_angle([1, 1, 0], 0.3)


def test_quaternion_rotation_round_trip(rng):
    for _ in range(200):
        u = rng.normal(size=3)
        u /= np.linalg.norm(u)
        theta = rng.uniform(-2 * math.pi, 2 * math.pi)
        q = quaternion_from_axis_angle(u, theta)
        assert abs(q.norm() - 1) < 1e-12
        r = q.to_rotation()
        np.testing.assert_allclose(r, exp_so3(theta * u), atol=1e-12)
        q2 = quaternion_from_rotation(r)
        np.testing.assert_allclose(q2.to_rotation(), r, atol=1e-12)
        q1 = quaternion_from_axis_angle(u, 0.4)
        np.testing.assert_allclose((q1 * q).to_rotation(), q1.to_rotation() @ r, atol=1e-12)


def test_euler_angles():
    np.testing.assert_array_equal(euler_angles_to_rotation(0, 0, 0), np.eye(3))
    np.testing.assert_allclose(euler_angles_to_rotation(math.pi / 2, 0, 0),
                               [[1, 0, 0], [0, 0, -1], [0, 1, 0]], atol=1e-15)
    from liemech.groups import rot_y
    a = euler_angles_to_rotation(math.pi / 2, math.pi / 2, 0)
    b = rot_y(math.pi / 2) @ rot_x(math.pi / 2)
    assert np.linalg.norm(a - b) > 0.5
    r = euler_angles_to_rotation(0.3, -1.2, 2.5)
    np.testing.assert_allclose(r.T @ r, np.eye(3), atol=1e-14)
    assert abs(np.linalg.det(r) - 1) < 1e-14


def test_euler_generators_are_skew():
    h = 1e-7
    from liemech.groups import rot_y, rot_z
    for rot, axis in ((rot_x, 0), (rot_y, 1), (rot_z, 2)):
        gen = (rot(h) - rot(-h)) / (2 * h)
        np.testing.assert_allclose(gen, hat3(np.eye(3)[axis]), atol=1e-8)


# --- SO(2) action, momentum map ------------------------------------------------

def test_so2_generator_field():
    np.testing.assert_array_equal(so2_generator_field(1.0, [1, 0]), [0, 1])
    np.testing.assert_array_equal(so2_generator_field(0.0, [1, 5]), [0, 0])
    h = 1e-6
    p = np.array([0.0, 3.0])
    rot = lambda t: np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
    fd = (rot(2 * h) @ p - rot(-2 * h) @ p) / (2 * h)
    np.testing.assert_allclose(so2_generator_field(2.0, p), fd, atol=1e-8)
    np.testing.assert_allclose(so2_generator_field(2.0, p), [-6, 0], atol=0)


def test_momentum_map_so2():
    assert momentum_map_so2(1, 0, 0, 1) == 1
    assert momentum_map_so2(0.4, -2.0, 0, 0) == 0


# --- Galilei -----------------------------------------------------------------

def _rand_galilei(rng):
    return GalileiTransform(rng.normal(), rng.normal(size=3), rng.normal(size=3), random_rotation(rng))


def test_galilei_apply_examples(rng):
    t, x = galilei_apply(GalileiTransform(), (1.5, np.array([1.0, 2.0, 3.0])))
    assert t == 1.5 and np.all(x == [1, 2, 3])
    t, x = galilei_apply(GalileiTransform(vel=[1, 0, 0]), (2.0, np.zeros(3)))
    assert t == 2.0 and np.all(x == [2, 0, 0])
    for _ in range(50):
        g = _rand_galilei(rng)
        t0 = rng.normal()
        x1 = rng.normal(size=3)
        d = rng.normal(size=3)
        x2 = x1 + 5 * d / np.linalg.norm(d)
        (ta, ya), (tb, yb) = galilei_apply(g, (t0, x1)), galilei_apply(g, (t0, x2))
        assert ta == tb
        assert abs(np.linalg.norm(ya - yb) - 5) < 1e-12
        t1 = t0 + rng.normal()
        assert abs((galilei_apply(g, (t1, x1))[0] - ta) - (t1 - t0)) < 1e-12


def test_galilei_compose(rng):
    g = _rand_galilei(rng)
    e = (0.7, np.array([1.0, -1.0, 2.0]))
    for c in (galilei_compose(GalileiTransform(), g), galilei_compose(g, GalileiTransform())):
        np.testing.assert_allclose(galilei_apply(c, e)[1], galilei_apply(g, e)[1], atol=1e-12)
    c = galilei_compose(GalileiTransform(a=[1, 2, 3]), GalileiTransform(a=[4, 5, 6]))
    np.testing.assert_array_equal(c.a, [5, 7, 9])
    g1, g2 = _rand_galilei(rng), _rand_galilei(rng)
    c = galilei_compose(g2, g1)
    for _ in range(100):
        ev = (rng.normal(), rng.normal(size=3))
        t_c, x_c = galilei_apply(c, ev)
        t_s, x_s = galilei_apply(g2, galilei_apply(g1, ev))
        assert abs(t_c - t_s) < 1e-12
        np.testing.assert_allclose(x_c, x_s, atol=1e-12)


def test_galilei_group_axioms(rng):
    for _ in range(50):
        g, h, k = (_rand_galilei(rng) for _ in range(3))
        ev = (rng.normal(), rng.normal(size=3))
        a = galilei_apply(galilei_compose(galilei_compose(g, h), k), ev)
        b = galilei_apply(galilei_compose(g, galilei_compose(h, k)), ev)
        assert abs(a[0] - b[0]) < 1e-12
        np.testing.assert_allclose(a[1], b[1], atol=1e-12)
        back = galilei_apply(galilei_compose(g.inverse(), g), ev)
        assert abs(back[0] - ev[0]) < 1e-12
        np.testing.assert_allclose(back[1], ev[1], atol=1e-12)


# --- matrix exponential -----------------------------------------------------------

def test_matrix_exp_examples():
    np.testing.assert_array_equal(matrix_exp(np.zeros((4, 4))), np.eye(4))
    np.testing.assert_allclose(matrix_exp([[1.0]]), [[math.e]], rtol=1e-15)
    np.testing.assert_allclose(matrix_exp(hat3([0, 0, 0.7])), exp_so3([0, 0, 0.7]), atol=1e-12)


def test_matrix_exp_small_matches_series(rng):
    for _ in range(50):
        a = 0.1 * rng.normal(size=(5, 5))
        np.testing.assert_allclose(matrix_exp(a), series_expm(a), atol=1e-13)


def test_matrix_exp_one_parameter(rng):
    for _ in range(50):
        a = rng.normal(size=(4, 4))
        s, t = rng.uniform(-1, 1, size=2)
        np.testing.assert_allclose(matrix_exp((s + t) * a), matrix_exp(s * a) @ matrix_exp(t * a),
                                   atol=1e-10, rtol=1e-10)


def test_matrix_exp_against_scipy(rng):
    scipy_linalg = pytest.importorskip("scipy.linalg")
    for _ in range(20):
        a = 3 * rng.normal(size=(6, 6))
        np.testing.assert_allclose(matrix_exp(a), scipy_linalg.expm(a), rtol=1e-10)


# --- charts and catalog ---------------------------------------------------------

def test_stereographic_transition(rng):
    np.testing.assert_array_equal(stereographic_transition([2, 0]), [0.5, 0])
    u = rng.normal(size=4)
    u /= np.linalg.norm(u)
    np.testing.assert_allclose(stereographic_transition(u), u, atol=1e-15)
    z = rng.normal(size=3)
    np.testing.assert_allclose(stereographic_transition(stereographic_transition(z)), z, atol=1e-14)
    with pytest.raises(ZeroInput):
        stereographic_transition([0, 0])


def test_catalog():
    so3 = catalog_lookup("SO", 3)
    assert so3.dimension == 3 and so3.compact and so3.connected
    gl2 = catalog_lookup("GL", 2)
    assert gl2.dimension == 4 and not gl2.compact and not gl2.connected
    su2 = catalog_lookup("SU", 2)
    assert su2.dimension == 3 and su2.compact and su2.simply_connected
    assert catalog_lookup("Sp", 2).dimension == 10
    with pytest.raises(UnknownGroup):
        catalog_lookup("E8", 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_catalog_dimension_formulas(n):
    assert catalog_lookup("GL", n).dimension == n * n
    assert catalog_lookup("SL", n).dimension == n * n - 1
    assert catalog_lookup("SO", n).dimension == n * (n - 1) // 2
    assert catalog_lookup("U", n).dimension == n * n
    assert catalog_lookup("SU", n).dimension == n * n - 1
