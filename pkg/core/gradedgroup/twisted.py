from __future__ import annotations

from core.algebra.constructors import twisted_group_algebra
from core.algebra.structure import center
from core.gradedgroup.cocycles import Cocycle, ray_classes
from core.schema.report import CheckReport


def twisted_center_prediction(alpha: Cocycle) -> CheckReport:
    """Ray-class count against the exact center dimension of K^alpha G."""
    classes = ray_classes(alpha)
    algebra = twisted_group_algebra(alpha.group, alpha)
    center_dim = len(center(algebra))
    certificate = {
        "ray_classes": [[alpha.group.label(g) for g in cls] for cls in classes],
        "predicted": len(classes),
        "center_dim": center_dim,
        "simple": center_dim == 1,
    }
    if center_dim == len(classes):
        return CheckReport.ok("twisted-center", certificate)
    return CheckReport.fail("twisted-center", certificate)
