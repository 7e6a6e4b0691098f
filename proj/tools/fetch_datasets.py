#!/usr/bin/env python3
"""Materialize the real-network datasets under data/.

The four networks used by the stats and attack-threshold tests are published
by their original maintainers and are not redistributed in this repository.
This script downloads and converts them into the formats the toolkit reads:

  lesmis.gml        Les Miserables co-appearances (Knuth, Stanford GraphBase)
  netscience.gml    network-science co-authorship network (M. Newman)
  usairport500.txt  500 busiest US airports (Colizza et al.), edge list
  yeast.txt         yeast protein-protein interactions (Jeong et al.,
                    KONECT moreno_propro), edge list

Run from the repository root:  python3 tools/fetch_datasets.py

Needs internet access. lesmis.gml can be produced offline when networkx is
installed (its bundled copy of the same graph is used as a fallback).

Expected statistics after conversion (the acceptance suite asserts these):
  lesmis      n=77   m=254   diameter=5   radius=3  cpl=2.641
  netscience  giant component: n=379, m=914, diameter=17, radius=9
  usairport   n=500  diameter=7  radius=4  cpl=2.999
  yeast       giant component: n=1458, diameter=19, radius=11
"""

import io
import pathlib
import sys
import tarfile
import urllib.request
import zipfile

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

NETSCIENCE_URL = "https://websites.umich.edu/~mejn/netdata/netscience.zip"
LESMIS_URL = "https://websites.umich.edu/~mejn/netdata/lesmis.zip"
USAIR_URL = "https://toreopsahl.com/datasets/#usairports"  # landing page
USAIR_FILE_URL = "http://opsahl.co.uk/tnet/datasets/USairport500.txt"
YEAST_URL = "http://konect.cc/files/download.tsv.moreno_propro.tar.bz2"


def fetch(url: str) -> bytes:
    print(f"fetching {url}")
    with urllib.request.urlopen(url, timeout=60) as response:
        return response.read()


def write(name: str, text: str) -> None:
    DATA.mkdir(exist_ok=True)
    path = DATA / name
    path.write_text(text)
    print(f"wrote {path}")


def netscience() -> None:
    blob = fetch(NETSCIENCE_URL)
    with zipfile.ZipFile(io.BytesIO(blob)) as z:
        gml = z.read("netscience.gml").decode("utf-8", errors="replace")
    write("netscience.gml", gml)


def lesmis() -> None:
    try:
        blob = fetch(LESMIS_URL)
        with zipfile.ZipFile(io.BytesIO(blob)) as z:
            write("lesmis.gml", z.read("lesmis.gml").decode("utf-8", errors="replace"))
        return
    except Exception as ex:  # offline fallback below
        print(f"download failed ({ex}); trying the networkx bundled copy")
    import networkx as nx

    g = nx.les_miserables_graph()
    names = sorted(g.nodes())
    idx = {name: i for i, name in enumerate(names)}
    lines = [
        "graph [",
        '  comment "Les Miserables character co-appearances '
        '(D. E. Knuth, The Stanford GraphBase)"',
    ]
    for name in names:
        lines.append(f'  node [ id {idx[name]} label "{name}" ]')
    for a, b, w in sorted(
        (min(idx[u], idx[v]), max(idx[u], idx[v]), int(d.get("weight", 1)))
        for u, v, d in g.edges(data=True)
    ):
        lines.append(f"  edge [ source {a} target {b} value {w} ]")
    lines.append("]")
    write("lesmis.gml", "\n".join(lines) + "\n")


def usairport() -> None:
    text = fetch(USAIR_FILE_URL).decode("utf-8", errors="replace")
    lines = ["# 500 busiest US airports; weights stripped"]
    for raw in text.splitlines():
        parts = raw.split()
        if len(parts) < 2 or raw.lstrip().startswith(("%", "#")):
            continue
        lines.append(f"{parts[0]} {parts[1]}")
    write("usairport500.txt", "\n".join(lines) + "\n")
    print(f"source page: {USAIR_URL}")


def yeast() -> None:
    blob = fetch(YEAST_URL)
    with tarfile.open(fileobj=io.BytesIO(blob), mode="r:bz2") as tar:
        member = next(
            m for m in tar.getmembers() if m.name.endswith("out.moreno_propro_propro")
        )
        text = tar.extractfile(member).read().decode("utf-8", errors="replace")
    lines = ["# yeast protein-protein interactions (moreno_propro)"]
    for raw in text.splitlines():
        parts = raw.split()
        if len(parts) < 2 or raw.lstrip().startswith("%"):
            continue
        lines.append(f"{parts[0]} {parts[1]}")
    write("yeast.txt", "\n".join(lines) + "\n")


def main() -> int:
    jobs = {
        "lesmis": lesmis,
        "netscience": netscience,
        "usairport": usairport,
        "yeast": yeast,
    }
    wanted = sys.argv[1:] or list(jobs)
    failures = 0
    for name in wanted:
        try:
            jobs[name]()
        except Exception as ex:
            print(f"{name}: FAILED ({ex})", file=sys.stderr)
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
