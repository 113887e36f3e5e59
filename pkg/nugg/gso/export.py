import logging
from pathlib import Path
from typing import Union

import numpy as np
from scipy import sparse

from nugg.errors import DomainError
from nugg.gso.modulation import GsoSpec
from nugg.utils.artifacts import PathLike, read_csv, read_json, write_csv, write_json

logger = logging.getLogger(__name__)

TRIPLET_COLUMNS = ["row", "col", "value"]

MatrixLike = Union[np.ndarray, sparse.spmatrix]


class GsoExport:
    class GsoExportError(DomainError):
        pass

    @classmethod
    def write_dense_csv(cls, L: MatrixLike, path: PathLike) -> Path:
        """One CSV row per matrix row, header c0..c{N-1}."""
        dense = L.toarray() if sparse.issparse(L) else np.asarray(L, dtype=float)
        header = [f"c{j}" for j in range(dense.shape[1])]
        return write_csv(path, header, (row.tolist() for row in dense))

    @classmethod
    def read_dense_csv(cls, path: PathLike) -> np.ndarray:
        rows = read_csv(path)
        if not rows:
            return np.zeros((0, 0))
        columns = list(rows[0])
        return np.array([[float(row[c]) for c in columns] for row in rows], dtype=float)

    @classmethod
    def write_triplets(cls, L: MatrixLike, path: PathLike) -> Path:
        """Nonzero entries as (row, col, value), sorted by row then column."""
        coo = sparse.coo_matrix(L)
        coo.sum_duplicates()
        order = np.lexsort((coo.col, coo.row))
        order = order[coo.data[order] != 0]
        rows = zip(coo.row[order].tolist(), coo.col[order].tolist(), coo.data[order].tolist())
        return write_csv(path, TRIPLET_COLUMNS, rows)

    @classmethod
    def read_triplets(cls, path: PathLike, N: int) -> sparse.csr_matrix:
        rows = read_csv(path)
        try:
            i = np.array([int(row["row"]) for row in rows], dtype=np.int64)
            j = np.array([int(row["col"]) for row in rows], dtype=np.int64)
            values = np.array([float(row["value"]) for row in rows], dtype=float)
        except (KeyError, ValueError) as e:
            raise GsoExport.GsoExportError(f"malformed triplet file {path}: {e}") from e
        return sparse.csr_matrix((values, (i, j)), shape=(N, N))

    @classmethod
    def write_spec(cls, spec: GsoSpec, path: PathLike) -> Path:
        return write_json(path, spec.to_dict())

    @classmethod
    def read_spec(cls, path: PathLike) -> GsoSpec:
        return GsoSpec.from_dict(read_json(path))


def write_dense_csv(L: MatrixLike, path: PathLike) -> Path:
    return GsoExport.write_dense_csv(L, path)


def write_triplets(L: MatrixLike, path: PathLike) -> Path:
    return GsoExport.write_triplets(L, path)
