import numpy as np
import pytest
from helpers import complete_bipartite

from nugg.gso.builder import build_gso, build_gso_sparse
from nugg.gso.export import GsoExport, write_dense_csv, write_triplets
from nugg.gso.presets import preset


def test_dense_csv(tmp_path) -> None:
    L = build_gso(complete_bipartite(2, 3), None, "random_walk")
    path = write_dense_csv(L, tmp_path / "gso.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == "c0,c1,c2,c3,c4"
    assert len(lines) == 6
    assert np.array_equal(GsoExport.read_dense_csv(path), L)


def test_triplets_hold_only_nonzero_entries(tmp_path) -> None:
    adjacency = complete_bipartite(1, 3)
    L = build_gso_sparse(adjacency, np.array([1.0, 2.0, 2.0, 4.0]), "combinatorial")
    path = write_triplets(L, tmp_path / "gso.triplets.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == "row,col,value"
    # three edges both ways plus four diagonal entries
    assert len(lines) == 1 + 6 + 4
    assert [tuple(map(int, line.split(",")[:2])) for line in lines[1:3]] == [(0, 0), (0, 1)]
    assert np.array_equal(GsoExport.read_triplets(path, 4).toarray(), L.toarray())


def test_malformed_triplets(tmp_path) -> None:
    path = tmp_path / "bad.csv"
    path.write_text("row,col,value\n0,x,1.0\n")
    with pytest.raises(GsoExport.GsoExportError):
        GsoExport.read_triplets(path, 2)


def test_spec_file(tmp_path) -> None:
    spec = preset("eq8")
    path = GsoExport.write_spec(spec, tmp_path / "spec.json")
    assert '"m1": "inv:0.5"' in path.read_text()
    assert GsoExport.read_spec(path) == spec
