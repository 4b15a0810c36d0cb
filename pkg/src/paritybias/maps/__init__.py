"""Proof maps as executable functions, plus the auditor."""

from .audit import FAMILIES, InjectionReport, audit_family
from .common import DomainError, DomainTag, ImageRegistry, MappingOutcome, UnmappedSubcase
from .thm1 import thm1_classify, thm1_f, thm1_f1, thm1_f2, thm1_f3, thm1_map
from .thm2 import thm2_classify, thm2_map
from .thm3 import thm3_classify, thm3_map
from .thm4 import thm4_classify, thm4_map, thm5_classify

__all__ = [
    "FAMILIES",
    "DomainError",
    "DomainTag",
    "ImageRegistry",
    "InjectionReport",
    "MappingOutcome",
    "UnmappedSubcase",
    "audit_family",
    "thm1_classify",
    "thm1_f",
    "thm1_f1",
    "thm1_f2",
    "thm1_f3",
    "thm1_map",
    "thm2_classify",
    "thm2_map",
    "thm3_classify",
    "thm3_map",
    "thm4_classify",
    "thm4_map",
    "thm5_classify",
]
