"""Enumeration: sphere oracles, determinism, budgets, checkpoints."""

import os

import pytest

from semeq.enumerator import (
    CorruptCheckpointError,
    EnumOptions,
    enumerate_maps,
    exists_any,
)
from semeq.mapcore import euler_characteristic, semi_equivelar_type, validate_polyhedral
from semeq.symmetry import canonical_code, isomorphic
from semeq.typecalc import parse_type


SPHERE_CASES = [
    ("[3^3]", 4, 2, 1),    # tetrahedron
    ("[3^4]", 6, 2, 1),    # octahedron
    ("[4^3]", 8, 2, 1),    # cube
    ("[3,4,3,4]", 12, 2, 1),  # cuboctahedron
]


@pytest.mark.parametrize("tstr,n,chi,count", SPHERE_CASES)
def test_sphere_oracles(tstr, n, chi, count):
    r = enumerate_maps(tstr, n, chi)
    assert r.complete
    assert len(r.maps) == count


def test_projective_plane_cases():
    # minimal triangulation (K6) and the hemidodecahedron exist; the hemicube
    # is a map but not polyhedral, so it must not be produced
    assert len(enumerate_maps("[3^5]", 6, 1).maps) == 1
    assert len(enumerate_maps("[5^3]", 10, 1).maps) == 1
    assert len(enumerate_maps("[4^3]", 4, 1).maps) == 0


def test_soundness_of_outputs():
    r = enumerate_maps("[3^1,4^1,3^1,4^2]", 12, -1)
    assert r.complete and len(r.maps) == 1
    m = r.maps[0]
    assert validate_polyhedral(m).ok
    assert m.f0 == 12
    assert euler_characteristic(m) == -1
    assert semi_equivelar_type(m).cycle == (3, 4, 3, 4, 4)


def test_inconsistent_parameters_diagnosed():
    r = enumerate_maps("[4^3]", 9, 2)
    assert r.complete and not r.maps and r.diagnostic
    r = enumerate_maps("[4^3,5^1]", 20, 0)
    assert r.complete and not r.maps and "Euler characteristic" in r.diagnostic
    r = enumerate_maps("[3^1,8^1,3^1,8^1]", 12, -1)
    assert r.complete and not r.maps and "closed star" in r.diagnostic


def test_budget_exhaustion_reports_incomplete():
    r = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(node_budget=50))
    assert not r.complete


def test_codes_pairwise_distinct(census_35_4):
    assert len(set(census_35_4.codes)) == len(census_35_4.maps) == 3


def test_branch_shuffle_same_code_set(census_35_4):
    base = set(census_35_4.codes)
    for seed in (1, 7):
        r = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(branch_shuffle_seed=seed))
        assert set(r.codes) == base


def test_thread_count_independence(census_35_4):
    r4 = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(threads=4))
    assert r4.complete
    assert set(r4.codes) == set(census_35_4.codes)


def test_pruning_free_agreement():
    # with the polyhedral-intersection cuts disabled the final validator does
    # all rejection work; the class sets must not change
    for tstr, n, chi, count in SPHERE_CASES[:3]:
        lax = enumerate_maps(tstr, n, chi, EnumOptions(disable_pair_prune=True))
        strict = enumerate_maps(tstr, n, chi)
        assert set(lax.codes) == set(strict.codes)
        assert len(lax.maps) == count


def test_exists_any():
    m = exists_any("[3^3]", 4, 2)
    assert m is not None and m.f0 == 4
    assert exists_any("[3^1,7^1,3^1,7^1]", 21, -1) is None
    tet = enumerate_maps("[3^3]", 4, 2).maps[0]
    assert isomorphic(m, tet) is not None


def test_checkpoint_round_trip(tmp_path, census_35_4):
    path = str(tmp_path / "ck.bin")
    r = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(checkpoint_path=path))
    assert r.complete
    assert set(r.codes) == set(census_35_4.codes)
    assert os.path.exists(path)
    # resuming a finished run returns the same maps byte-for-byte
    r2 = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(checkpoint_path=path))
    assert r2.codes == r.codes


def test_checkpoint_wrong_params_rejected(tmp_path):
    path = str(tmp_path / "ck.bin")
    enumerate_maps("[3^3]", 4, 2, EnumOptions(checkpoint_path=path))
    with pytest.raises(CorruptCheckpointError):
        enumerate_maps("[3^4]", 6, 2, EnumOptions(checkpoint_path=path))


def test_checkpoint_corrupt_rejected(tmp_path):
    path = tmp_path / "ck.bin"
    path.write_bytes(b"NOTMAGIC" + b"\x00" * 32)
    with pytest.raises(CorruptCheckpointError):
        enumerate_maps("[3^3]", 4, 2, EnumOptions(checkpoint_path=str(path)))
    path.write_bytes(b"SEMQCKPT" + b"\xff\xff" + b"\x00" * 32)
    with pytest.raises(CorruptCheckpointError):
        enumerate_maps("[3^3]", 4, 2, EnumOptions(checkpoint_path=str(path)))


def test_interrupted_checkpoint_resume(tmp_path, census_35_4):
    """Stop a run mid-way via a node budget, then resume to completion: the
    final map set must equal the uninterrupted run's, byte for byte."""
    path = str(tmp_path / "ck.bin")
    partial = enumerate_maps(
        "[3^5,4^1]", 12, -1,
        EnumOptions(checkpoint_path=path, node_budget=2000, checkpoint_every=1),
    )
    assert not partial.complete
    resumed = enumerate_maps("[3^5,4^1]", 12, -1, EnumOptions(checkpoint_path=path))
    assert resumed.complete
    assert resumed.codes == census_35_4.codes
