"""Matplotlib report figures written next to the delimited CLI output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .scalars import DISK_PRODUCT, MIN_PRODUCT  # noqa: E402


def plot_continuity(rows, path) -> None:
    """Product convergence and radial-gap curves for an approximation run."""
    ms = [r.m for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.5, 4.0))
    ax1.plot(ms, [r.product for r in rows], "o-", label="volume product")
    ax1.axhline(DISK_PRODUCT, color="gray", ls="--", lw=1, label=r"$\pi^2$")
    ax1.axhline(MIN_PRODUCT, color="gray", ls=":", lw=1, label="8")
    ax1.set_xlabel("vertex count m")
    ax1.set_ylabel("volume product")
    ax1.set_xscale("log", base=2)
    ax1.legend(frameon=False, fontsize=8)
    ax2.loglog(ms, [r.radial_gap for r in rows], "o-", label="radial gap")
    ax2.loglog(ms, [r.bound_rhs for r in rows], "s--", label="bound (4 r1/r0) d")
    ax2.loglog(ms, [r.hausdorff_proxy for r in rows], "^:", label="Hausdorff to proxy")
    ax2.set_xlabel("vertex count m")
    ax2.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_product_histogram(products, path) -> None:
    """Histogram of corpus volume products between the two extremal bodies."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.hist(products, bins=60, color="#1f77b4", alpha=0.85)
    ax.axvline(MIN_PRODUCT, color="#d62728", lw=1.2, label="parallelogram (8)")
    ax.axvline(DISK_PRODUCT, color="gray", ls="--", lw=1.2, label=r"disk ($\pi^2$)")
    ax.set_xlabel("volume product")
    ax.set_ylabel("polygons")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_certificate(cert, path) -> None:
    """Volume product along the reduction, deletions marked."""
    products = [cert.steps[0].product_before] if cert.steps else [cert.final_product]
    deletions = []
    for i, step in enumerate(cert.steps):
        products.append(step.product_after)
        if step.kind == "delete_pair":
            deletions.append(i + 1)
    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    ax.plot(range(len(products)), products, "-", color="#1f77b4", lw=1.2)
    if deletions:
        ax.plot(deletions, [products[i] for i in deletions], "v", color="#d62728",
                label="vertex-pair deletion")
        ax.legend(frameon=False, fontsize=8)
    ax.axhline(MIN_PRODUCT, color="gray", ls=":", lw=1)
    ax.set_xlabel("step")
    ax.set_ylabel("volume product")
    ax.set_ylim(bottom=min(7.8, min(products) - 0.1))
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
