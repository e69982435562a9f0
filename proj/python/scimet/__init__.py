"""Bibliometric analyses: growth, collaboration, citation indices and the classic laws."""

from ._scimet import (
    BibRecord,
    Corpus,
    DataError,
    __version__,
    activity_index,
    block_aggregate,
    bradford_zones,
    co_authorship_index,
    collaborative_coefficient,
    collaborative_index,
    degree_of_collaboration,
    fixture_names,
    fixture_text,
    g_index,
    h_index,
    index_bundle,
    ks_test,
    linear_projection,
    lotka_constant,
    lotka_fit,
    modified_cc,
    pareto_check,
    parse_export,
    price_sqrt_check,
    rgr_table,
    run_criterion,
    run_all_criteria,
    serialize_export,
    zipf_constants,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
