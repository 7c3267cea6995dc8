"""Exact enumerative invariants of weighted-homogeneous map-germs.

Thin pure-python layer over the compiled `_thomforge` module: resolves the
polynomial database and converts exact "p/q" strings to fractions.Fraction.
"""

import os
from fractions import Fraction

from _thomforge import (  # noqa: F401
    Database,
    EngineError,
    GermSignature,
    ParseError,
    UnknownKeyError,
    chi_image_global,
    default_db_path,
    enriques_invariants,
    infer_signature,
    izumiya_marar_real,
    solve_job_file,
    solve_job_text,
)

__all__ = [
    "Database",
    "EngineError",
    "GermSignature",
    "ParseError",
    "UnknownKeyError",
    "chi_image_global",
    "count",
    "default_db",
    "enriques",
    "infer_signature",
    "izumiya_marar_real",
    "load_database",
    "mu_discriminant",
    "mu_image",
    "mu_image2",
    "solve_job_file",
    "solve_job_text",
]


def load_database(path=None):
    """Loads the polynomial database.

    Resolution order: explicit `path`, the THOMFORGE_DB environment variable,
    a data file shipped inside this package, then the path compiled into the
    extension module.
    """
    if path is not None:
        return Database.load(str(path))
    if os.environ.get("THOMFORGE_DB"):
        return Database.load(os.environ["THOMFORGE_DB"])
    packaged = os.path.join(os.path.dirname(__file__), "data", "thomforge_db.txt")
    if os.path.exists(packaged):
        return Database.load(packaged)
    return Database.load_default()


_default_db = None


def default_db():
    """The shared read-only database instance."""
    global _default_db
    if _default_db is None:
        _default_db = load_database()
    return _default_db


def _as_fraction(result):
    value = Fraction(result["value"])
    for warning in result["warnings"]:
        import warnings as _w

        _w.warn(warning, stacklevel=3)
    return value


def _signature(germ):
    if isinstance(germ, GermSignature):
        return germ
    if isinstance(germ, str):
        return infer_signature(germ)
    weights, degrees = germ
    return GermSignature(list(weights), list(degrees))


def count(germ, type_name, db=None):
    """Number of stable multi-singular points of `type_name`, as a Fraction.

    `germ` is a GermSignature, a (weights, degrees) pair, or a map string.
    """
    return _as_fraction((db or default_db()).count(_signature(germ), type_name))


def mu_image(germ, db=None):
    """Image Milnor number (kappa = 1), as a Fraction."""
    return _as_fraction((db or default_db()).mu_image(_signature(germ)))


def mu_image2(germ, db=None):
    """Second image Milnor number (kappa = 1), as a Fraction."""
    return _as_fraction((db or default_db()).mu_image2(_signature(germ)))


def mu_discriminant(germ, db=None):
    """Discriminant Milnor number (kappa = 0), as a Fraction."""
    return _as_fraction((db or default_db()).mu_discriminant(_signature(germ)))


def enriques(d, delta, C, T):
    """Chern numbers and Euler characteristic of the normalized surface."""
    raw = enriques_invariants(d, delta, C, T)
    return {key: Fraction(value) for key, value in raw.items()}
