import numpy as np
import pytest

from infoeda import Dataset


def write_csv(path, text: str):
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def csv_factory(tmp_path):
    counter = {"n": 0}

    def make(text: str):
        counter["n"] += 1
        return write_csv(tmp_path / f"data{counter['n']}.csv", text)

    return make


def two_class_dataset(n_per_class=2000, delta=2.0, seed=0, extra_noise_vars=0):
    """One class-shifted Gaussian variable plus optional pure-noise variables."""
    rng = np.random.default_rng(seed)
    n = 2 * n_per_class
    codes = np.repeat([0, 1], n_per_class)
    cols = [rng.standard_normal(n) + delta * codes]
    names = ["inf"]
    for i in range(extra_noise_vars):
        cols.append(rng.standard_normal(n))
        names.append(f"noise{i + 1}")
    return Dataset.from_arrays(
        names=names,
        matrix=np.column_stack(cols),
        class_name="Flag",
        class_codes=codes,
        class_levels=("bg", "sig"),
    )


def ranking_fixture(n_per_class=2000, seed=7):
    """Four variables: informative (2-sigma shift), correlated copy, two noise."""
    rng = np.random.default_rng(seed)
    n = 2 * n_per_class
    codes = np.repeat([0, 1], n_per_class)
    inf = rng.standard_normal(n) + 2.0 * codes
    copy = inf + 0.3 * rng.standard_normal(n)
    noise1 = rng.standard_normal(n)
    noise2 = rng.standard_normal(n)
    return Dataset.from_arrays(
        names=["inf", "copy", "noise1", "noise2"],
        matrix=np.column_stack([inf, copy, noise1, noise2]),
        class_name="Flag",
        class_codes=codes,
        class_levels=("bg", "sig"),
    )
