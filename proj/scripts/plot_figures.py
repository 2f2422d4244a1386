"""Plot r_p(a) from the CSVs written by `schurcurv figures --out-dir data`."""

import argparse
import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIGURES = {
    "figure1.csv": "p = 1 + 1e-1",
    "figure2.csv": "p = 1 + 1e-6",
}


def read_curve(path):
    with open(path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    return [float(r["a"]) for r in rows], [float(r["r"]) for r in rows]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data-dir", type=Path, default=Path("data"))
    parser.add_argument("--out-dir", type=Path, default=Path("data"))
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, title in FIGURES.items():
        a, r = read_curve(args.data_dir / name)
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.plot(a, r)
        ax.set_xlabel("a")
        ax.set_ylabel("r_p(a)")
        ax.set_title(title)
        fig.tight_layout()
        fig.savefig(args.out_dir / Path(name).with_suffix(".png"), dpi=150)
        plt.close(fig)


if __name__ == "__main__":
    main()
