"""Regenerate the client test fixtures from the Python analysis package.

The recompute payloads here are produced by the same AnalysisService the
explorer talks to, so client tests asserting against them are asserting
agreement with a real batch run.
"""

import json
from pathlib import Path

import numpy as np

from infoeda import Dataset
from infoeda.server import AnalysisService, UnprocessableSubset

OUT = Path(__file__).parent / "fixtures"


def fixture_dataset() -> Dataset:
    rng = np.random.default_rng(3)
    n_per_class = 30
    n = 2 * n_per_class
    codes = np.repeat([0, 1], n_per_class)
    inf = rng.standard_normal(n) + 2.0 * codes
    copy = inf + 0.3 * rng.standard_normal(n)
    noise = rng.standard_normal(n)
    return Dataset.from_arrays(
        names=["inf", "copy", "noise"],
        matrix=np.column_stack([inf, copy, noise]),
        class_name="Flag",
        class_codes=codes,
        class_levels=("bg", "sig"),
    )


def main() -> None:
    OUT.mkdir(exist_ok=True)
    dataset = fixture_dataset()
    service = AnalysisService(dataset, max_size=1)

    (OUT / "bundle.json").write_bytes(service.bundle_bytes)

    pruned_rows = [i for i in range(dataset.n_rows) if i % 5 != 0]
    pruned = service.recompute({"rows": pruned_rows})
    (OUT / "recompute_pruned.json").write_text(json.dumps(pruned, indent=1))

    part = dataset.partition_by_class()
    error_rows = [int(i) for i in part.row_indices[0]] + [int(part.row_indices[1][0])]
    try:
        service.recompute({"rows": error_rows})
        raise SystemExit("expected the one-class subset to be rejected")
    except UnprocessableSubset as exc:
        error_payload = {"error": str(exc), "status": exc.status,
                         "subset_hash": exc.subset_hash}
    (OUT / "recompute_error.json").write_text(json.dumps(error_payload, indent=1))

    meta = {
        "n_rows": dataset.n_rows,
        "pruned_request_rows": pruned_rows,
        "error_request_rows": error_rows,
    }
    (OUT / "meta.json").write_text(json.dumps(meta, indent=1))
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
