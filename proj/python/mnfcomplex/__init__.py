"""Simplicial complexes given by their minimal non-faces.

Vertices are labelled 1..n throughout, matching the text file format.
"""

import json

from ._core import (
    Complex,
    MnfError,
    are_isomorphic,
    betti_totals,
    canonical_key,
    codim3_sphere,
    cross_minus_facet,
    cross_polytope,
    cyclic_boundary,
    duality_violations,
    is_homology_sphere,
    is_join_irreducible,
    is_point_separating,
    join,
    nerve_dot,
    nerve_facets,
    one_point_suspension,
    pd_sphere,
    reduced_betti,
    simplex_boundary,
    two_point_suspension,
    unsuspend,
)
from . import _core


def analyze(c, field="gf2", lcm=True):
    """The analysis report as a dict."""
    return json.loads(_core._analyze(c, field, lcm))


_MODES = {"spheres": "homology-spheres", "all": "all-complexes", "codim3": "codim3-only"}


def census(n_max, m_max, mode="spheres", unsuspended=False, join_irreducible=False, field="gf2", codim=None):
    """Census records (dicts) and the run summary.

    mode is "spheres", "all" or "codim3".
    """
    cfg = json.loads(_core._default_census_config())
    cfg.update(
        n_max=n_max,
        m_max=m_max,
        mode=_MODES[mode],
        require_unsuspended=unsuspended,
        require_join_irreducible=join_irreducible,
        field=field,
        codim=codim,
    )
    records, summary = _core._census(json.dumps(cfg))
    return [json.loads(r) for r in records], json.loads(summary)


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
