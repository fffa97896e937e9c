"""Graph data model, TU-format ingestion, splits, and feature perturbation."""

from __future__ import annotations

import json
import os
import warnings
from dataclasses import dataclass, field

import numpy as np

from .rng import rng_for


class LoadError(Exception):
    """A mandatory dataset file is missing or unreadable."""


class FormatError(Exception):
    """Dataset file contents violate the TU layout."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph with node features and a class label."""

    num_nodes: int
    edges: tuple  # unordered (u, v) pairs, u < v, no duplicates or self-loops
    features: np.ndarray  # num_nodes x feature_dim, float64
    label: int

    def __post_init__(self):
        for u, v in self.edges:
            if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
                raise FormatError(f"edge ({u}, {v}) out of range for {self.num_nodes} nodes")
        if self.features.shape[0] != self.num_nodes:
            raise FormatError(
                f"feature rows {self.features.shape[0]} != num_nodes {self.num_nodes}"
            )
        self.features.setflags(write=False)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency matrix."""
        a = np.zeros((self.num_nodes, self.num_nodes))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.num_nodes, dtype=np.int64)
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d


@dataclass(frozen=True)
class Dataset:
    graphs: tuple
    num_classes: int
    feature_dim: int
    name: str

    def __post_init__(self):
        for g in self.graphs:
            if g.features.shape[1] != self.feature_dim:
                raise FormatError("graphs disagree on feature_dim")
            if not 0 <= g.label < self.num_classes:
                raise FormatError(f"label {g.label} outside [0, {self.num_classes})")

    def __len__(self) -> int:
        return len(self.graphs)


@dataclass(frozen=True)
class FoldPlan:
    """Ten (train, val, test) index triples; the test sets partition the dataset."""

    folds: tuple

    def __post_init__(self):
        seen = []
        for train, val, test in self.folds:
            assert not (set(train) & set(val)) and not (set(train) & set(test))
            assert not (set(val) & set(test))
            seen.extend(test)
        assert len(seen) == len(set(seen)), "test sets overlap"


def _canonical_edges(raw_edges):
    """Dedupe to unordered pairs, drop self-loops."""
    out = set()
    for u, v in raw_edges:
        if u == v:
            continue
        out.add((min(u, v), max(u, v)))
    return tuple(sorted(out))


def build_features(node_labels, node_attributes, graphs):
    """Per-graph feature matrices from optional node labels/attributes.

    `graphs` is a list of (num_nodes, edges) pairs covering all nodes in
    order. Labels become one-hot blocks (dataset-wide alphabet); attributes
    pass through; with both, blocks are concatenated label-first. With
    neither, features are a degree one-hot capped at 10 plus the raw degree.
    """
    total = sum(n for n, _ in graphs)
    if node_attributes is not None and len(node_attributes) != total:
        raise FormatError(
            f"node attribute rows {len(node_attributes)} != total node count {total}"
        )
    if node_labels is not None and len(node_labels) != total:
        raise FormatError(f"node label rows {len(node_labels)} != total node count {total}")

    blocks = []
    if node_labels is not None:
        alphabet = sorted(set(node_labels))
        index = {lab: i for i, lab in enumerate(alphabet)}
        onehot = np.zeros((total, len(alphabet)))
        for row, lab in enumerate(node_labels):
            onehot[row, index[lab]] = 1.0
        blocks.append(onehot)
    if node_attributes is not None:
        blocks.append(np.asarray(node_attributes, dtype=np.float64))

    if not blocks:
        # Degree fallback: 11 one-hot bins (0..10, >=10 clamped) plus the scalar.
        feats = np.zeros((total, 12))
        offset = 0
        for n, edges in graphs:
            deg = np.zeros(n, dtype=np.int64)
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            for i in range(n):
                feats[offset + i, min(deg[i], 10)] = 1.0
                feats[offset + i, 11] = float(deg[i])
            offset += n
        full = feats
    else:
        full = np.concatenate(blocks, axis=1)

    out = []
    offset = 0
    for n, _ in graphs:
        out.append(full[offset : offset + n].copy())
        offset += n
    return out


def _read_int_lines(path):
    with open(path) as fh:
        return [int(float(line.strip().split(",")[0])) for line in fh if line.strip()]


def load_tudataset(dir_path) -> Dataset:
    """Load a dataset in the standard TU text layout (1-indexed node ids)."""
    dir_path = os.path.abspath(dir_path)
    if not os.path.isdir(dir_path):
        raise LoadError(f"dataset directory not found: {dir_path}")
    prefix = None
    for fname in sorted(os.listdir(dir_path)):
        if fname.endswith("_A.txt"):
            prefix = fname[: -len("_A.txt")]
            break
    if prefix is None:
        raise LoadError(f"missing edge file *_A.txt in {dir_path}")

    def fpath(suffix):
        return os.path.join(dir_path, f"{prefix}_{suffix}.txt")

    for suffix in ("A", "graph_indicator", "graph_labels"):
        if not os.path.exists(fpath(suffix)):
            raise LoadError(f"missing mandatory file {prefix}_{suffix}.txt")

    indicator = _read_int_lines(fpath("graph_indicator"))
    raw_labels = _read_int_lines(fpath("graph_labels"))
    num_graphs = len(raw_labels)
    if indicator and (min(indicator) < 1 or max(indicator) > num_graphs):
        raise FormatError("graph_indicator references an unknown graph id")

    # Global 1-indexed node id -> (graph index, local 0-indexed id).
    node_of = []
    counts = [0] * num_graphs
    for gid in indicator:
        g = gid - 1
        node_of.append((g, counts[g]))
        counts[g] += 1

    per_graph_edges = [[] for _ in range(num_graphs)]
    with open(fpath("A")) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise FormatError(f"{prefix}_A.txt line {lineno}: expected two node ids")
            u, v = int(parts[0]), int(parts[1])
            if not (1 <= u <= len(node_of)) or not (1 <= v <= len(node_of)):
                raise FormatError(f"{prefix}_A.txt line {lineno}: node id out of range")
            gu, lu = node_of[u - 1]
            gv, lv = node_of[v - 1]
            if gu != gv:
                raise FormatError(
                    f"{prefix}_A.txt line {lineno}: edge joins nodes of graphs {gu + 1} and {gv + 1}"
                )
            per_graph_edges[gu].append((lu, lv))

    node_labels = None
    if os.path.exists(fpath("node_labels")):
        node_labels = _read_int_lines(fpath("node_labels"))
    node_attributes = None
    if os.path.exists(fpath("node_attributes")):
        with open(fpath("node_attributes")) as fh:
            node_attributes = [
                [float(x) for x in line.replace(",", " ").split()]
                for line in fh
                if line.strip()
            ]

    structures = [(counts[g], _canonical_edges(per_graph_edges[g])) for g in range(num_graphs)]
    features = build_features(node_labels, node_attributes, structures)

    label_alphabet = sorted(set(raw_labels))
    label_index = {lab: i for i, lab in enumerate(label_alphabet)}
    graphs = tuple(
        Graph(
            num_nodes=structures[g][0],
            edges=structures[g][1],
            features=features[g],
            label=label_index[raw_labels[g]],
        )
        for g in range(num_graphs)
    )
    return Dataset(
        graphs=graphs,
        num_classes=len(label_alphabet),
        feature_dim=features[0].shape[1] if graphs else 0,
        name=os.path.basename(dir_path),
    )


def save_tudataset(dataset: Dataset, dir_path) -> None:
    """Write a dataset back out in the TU layout (features as node attributes)."""
    os.makedirs(dir_path, exist_ok=True)
    prefix = os.path.basename(os.path.abspath(dir_path))

    def fpath(suffix):
        return os.path.join(dir_path, f"{prefix}_{suffix}.txt")

    with open(fpath("A"), "w") as fh:
        offset = 0
        for g in dataset.graphs:
            for u, v in g.edges:
                fh.write(f"{offset + u + 1}, {offset + v + 1}\n")
                fh.write(f"{offset + v + 1}, {offset + u + 1}\n")
            offset += g.num_nodes
    with open(fpath("graph_indicator"), "w") as fh:
        for gid, g in enumerate(dataset.graphs, start=1):
            fh.writelines(f"{gid}\n" for _ in range(g.num_nodes))
    with open(fpath("graph_labels"), "w") as fh:
        fh.writelines(f"{g.label}\n" for g in dataset.graphs)
    with open(fpath("node_attributes"), "w") as fh:
        for g in dataset.graphs:
            for row in g.features:
                fh.write(", ".join(repr(float(x)) for x in row) + "\n")


def dataset_summary(dataset: Dataset) -> dict:
    n = max(len(dataset.graphs), 1)
    return {
        "name": dataset.name,
        "num_graphs": len(dataset.graphs),
        "num_classes": dataset.num_classes,
        "feature_dim": dataset.feature_dim,
        "avg_nodes": sum(g.num_nodes for g in dataset.graphs) / n,
        "avg_edges": sum(g.num_edges for g in dataset.graphs) / n,
    }


def summary_json(dataset: Dataset) -> str:
    return json.dumps(dataset_summary(dataset), sort_keys=True)


def stratified_kfold(dataset: Dataset, seed: int) -> FoldPlan:
    """Ten stratified folds: test = decile i, val = decile i+1, train = rest."""
    if not dataset.graphs:
        raise ValueError("cannot split an empty dataset")
    rng = rng_for(seed, "kfold")
    by_class = {}
    for idx, g in enumerate(dataset.graphs):
        by_class.setdefault(g.label, []).append(idx)

    if any(len(v) < 10 for v in by_class.values()):
        warnings.warn("a class has fewer than 10 graphs; falling back to non-stratified folds")
        pools = [list(range(len(dataset.graphs)))]
    else:
        pools = [by_class[c] for c in sorted(by_class)]

    buckets = [[] for _ in range(10)]
    pointer = 0
    for pool in pools:
        order = rng.permutation(len(pool))
        for j in order:
            buckets[pointer % 10].append(pool[j])
            pointer += 1

    folds = []
    for i in range(10):
        test = tuple(sorted(buckets[i]))
        val = tuple(sorted(buckets[(i + 1) % 10]))
        train = tuple(
            sorted(x for j in range(10) if j not in (i, (i + 1) % 10) for x in buckets[j])
        )
        folds.append((train, val, test))
    return FoldPlan(folds=tuple(folds))


def perturb_features(X: np.ndarray, gamma: float, seed: int) -> np.ndarray:
    """Add seeded gaussian noise scaled by gamma and the per-graph level r.

    r is the mean over nodes of each node's maximal feature value; gamma 0
    returns the input unchanged (bit-exact).
    """
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    X = np.asarray(X, dtype=np.float64)
    if not np.all(np.isfinite(X)):
        raise ValueError("features must be finite")
    if gamma == 0:
        return X.copy()
    r = float(np.mean(np.max(X, axis=1)))
    eps = rng_for(seed, "perturb").standard_normal(X.shape)
    return X + gamma * r * eps


_CYCLE6 = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5))
_TWO_TRIANGLES = ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5))


def synthetic_substructure_dataset(
    num_graphs: int = 200, seed: int = 0, nuisance_dims: int = 3
) -> Dataset:
    """Six-node benchmark where the label is carried by community structure.

    Class 0 graphs are a single 6-cycle (three 2-node communities under
    modularity optimization); class 1 graphs are two disjoint triangles (two
    3-node communities). Node features are a constant 1 plus per-graph
    nuisance columns, identical across nodes, so the classes are
    indistinguishable by any grouping-free statistic of node features,
    degrees, or centralities.
    """
    rng = rng_for(seed, "substructure")
    labels = np.array([0] * (num_graphs // 2) + [1] * (num_graphs - num_graphs // 2))
    rng.shuffle(labels)
    graphs = []
    for label in labels:
        base = _CYCLE6 if label == 0 else _TWO_TRIANGLES
        perm = rng.permutation(6)
        edges = _canonical_edges((perm[u], perm[v]) for u, v in base)
        row = np.concatenate([[1.0], rng.standard_normal(nuisance_dims)])
        feats = np.tile(row, (6, 1))
        graphs.append(Graph(num_nodes=6, edges=edges, features=feats, label=int(label)))
    return Dataset(
        graphs=tuple(graphs),
        num_classes=2,
        feature_dim=1 + nuisance_dims,
        name="substructures",
    )
