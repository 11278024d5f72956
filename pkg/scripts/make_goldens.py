"""Write docs/goldens/<name>.tree: the tree report (seed 0) of every catalog entry."""

import argparse
from pathlib import Path

from duallie.catalog import CATALOG, catalog
from duallie.report import build_report, render_tree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "docs" / "goldens"))
    ap.add_argument("--check", action="store_true", help="compare instead of writing; exit 1 on drift")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    drift = []
    for name in CATALOG:
        text = render_tree(build_report(catalog(name), seed=0))
        path = out / (name.replace(":", "_") + ".tree")
        if args.check:
            if not path.exists() or path.read_text() != text:
                drift.append(name)
        else:
            path.write_text(text)
    if drift:
        print("drift:", ", ".join(drift))
        raise SystemExit(1)
    print(("checked" if args.check else "wrote"), len(CATALOG), "goldens in", out)


if __name__ == "__main__":
    main()
