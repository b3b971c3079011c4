import numpy as np

from unitary3.linalg import hermiticity_distance, unitarity_distance
from unitary3.sampling import (
    SeededGenerator,
    generate_haar_unitary,
    random_hermitian,
    random_params,
    random_psd_hermitian,
)


def test_stream_is_deterministic():
    a = SeededGenerator(42)
    b = SeededGenerator(42)
    assert [a.next_uint64() for _ in range(20)] == [b.next_uint64() for _ in range(20)]
    assert [a.gauss() for _ in range(20)] == [b.gauss() for _ in range(20)]


def test_stream_depends_on_seed():
    assert SeededGenerator(1).next_uint64() != SeededGenerator(2).next_uint64()


def test_splitmix64_known_values():
    # Reference stream for seed 0 (SplitMix64 is fully specified by its
    # constants, so these values pin the implementation).
    g = SeededGenerator(0)
    assert g.next_uint64() == 0xE220A8397B1DCDAF
    assert g.next_uint64() == 0x6E789E6AA1B965F4
    assert g.next_uint64() == 0x06C45D188009454F


def test_uniform_range():
    g = SeededGenerator(7)
    xs = [g.uniform() for _ in range(5000)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert abs(np.mean(xs) - 0.5) < 0.02


def test_gauss_moments():
    g = SeededGenerator(8)
    xs = np.array([g.gauss() for _ in range(20000)])
    assert abs(np.mean(xs)) < 0.03
    assert abs(np.std(xs) - 1.0) < 0.03


def test_haar_unitary_is_unitary():
    g = SeededGenerator(9)
    for _ in range(500):
        assert unitarity_distance(generate_haar_unitary(g)) <= 1e-13


def test_haar_moment():
    g = SeededGenerator(10)
    acc = sum(abs(generate_haar_unitary(g)[0, 0]) ** 2 for _ in range(10000))
    assert abs(acc / 10000 - 1.0 / 3.0) <= 0.02


def test_haar_golden_seed_42():
    u = generate_haar_unitary(SeededGenerator(42))
    golden = np.array(
        [
            [0.18594854964722485 + 0.2926437106379602j,
             -0.6091206953700444 + 0.6518322428883457j,
             -0.281305739941236 + 0.06882282896914073j],
            [0.24464069690560897 - 0.7428780824025112j,
             -0.23391183825663808 - 0.18338911807268027j,
             -0.45496706983031454 + 0.30486346578337076j],
            [-0.5136627451128943 - 0.06493430445250754j,
             0.28030433867166193 + 0.19279488224750596j,
             -0.6681230227905992 - 0.4120744567508645j],
        ]
    )
    assert np.allclose(u, golden, atol=1e-15)


def test_random_params_ranges():
    g = SeededGenerator(11)
    for _ in range(500):
        p = random_params(g, margin=1e-3)
        assert abs(p.chi) <= np.pi / 4 - 1e-3 + 1e-15
        assert 1e-3 <= p.mu <= np.pi / 2 - 1e-3
        assert abs(p.rotation.theta) <= np.pi / 2 - 1e-3
        assert 1e-3 <= p.rotation.varphi <= np.pi - 1e-3
        assert -np.pi <= p.alpha1 <= np.pi


def test_random_hermitian_shapes():
    g = SeededGenerator(12)
    h = random_hermitian(g)
    assert hermiticity_distance(h) == 0.0
    r = random_psd_hermitian(g)
    assert hermiticity_distance(r) < 1e-13
    assert np.all(np.linalg.eigvalsh(r) > -1e-12)
