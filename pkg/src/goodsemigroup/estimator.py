"""scikit-learn style wrapper around the level partition.

>>> est = AperyLevels(omega=(1, 2, 3)).fit(load_semigroup("data/three_branch.gs"))
>>> est.predict([(0, 0, 0), (3, 100, 100)])
array([1, 6])
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_omega, check_points, check_semigroup
from .ideal import ideal_from_generators, principal_ideal
from .levels import compute_levels


class AperyLevels(TransformerMixin, BaseEstimator):
    """Levels of ``S \\ E`` for ``E = omega + S`` or a generated ideal.

    Parameters
    ----------
    omega : point, optional
        Generator of a principal ideal.  Defaults to the least nonzero
        element of a local semigroup.
    generators : list of points, optional
        Generators of a non-principal ideal; overrides ``omega``.
    """

    def __init__(self, omega=None, generators=None):
        self.omega = omega
        self.generators = generators

    def fit(self, X, y=None):
        """``X`` is a :class:`GoodSemigroup` or its small elements."""
        S = check_semigroup(X)
        if self.generators is not None:
            gens = [check_omega(g, S.d) for g in self.generators]
            E = ideal_from_generators(S, gens)
        else:
            w = self.omega
            if w is None:
                w = S.minimal_nonzero()
                if w is None:
                    raise ValueError("omega is required for a non-local semigroup")
            E = principal_ideal(S, check_omega(w, S.d))
        self.semigroup_ = S
        self.ideal_ = E
        self.partition_ = compute_levels(E.complement(), E)
        self.n_levels_ = self.partition_.N
        self.n_features_in_ = S.d
        self._table = self.partition_.level_table()
        return self

    def _cells(self, X) -> np.ndarray:
        check_is_fitted(self, "partition_")
        pts = check_points(X, self.n_features_in_)
        return np.minimum(pts, np.array(self.ideal_.conductor))

    def predict(self, X) -> np.ndarray:
        """Level of each point; 0 for points outside the complement."""
        cells = self._cells(X)
        return self._table[tuple(cells.T)]

    def transform(self, X) -> np.ndarray:
        """Columns: level, and dimension of the subspace the point lies on."""
        cells = self._cells(X)
        level = self._table[tuple(cells.T)]
        dim = (cells == np.array(self.ideal_.conductor)).sum(axis=1)
        return np.column_stack([level, np.where(level > 0, dim, 0)])
