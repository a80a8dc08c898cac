"""
Subpackage for the Boolean discriminator clones: the fast classification
path and the published class posets.
"""

from clone_minors.boolean.catalog import (
    BooleanCloneId,
    ClassLabel,
    boolean_minor,
    class_label,
    d_c,
    im1,
    im2,
    is_subclone,
    label_keys,
)
from clone_minors.boolean.figures import expected_poset, representative

__all__ = [
    "BooleanCloneId",
    "ClassLabel",
    "boolean_minor",
    "class_label",
    "d_c",
    "im1",
    "im2",
    "is_subclone",
    "label_keys",
    "expected_poset",
    "representative",
]
