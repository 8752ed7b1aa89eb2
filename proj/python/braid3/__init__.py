# Copyright 2026 The Braid3 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Conjugacy classes of positive 3-braids.

Braid words are strings over {'1', '2'}; the identity is "e". Normal
forms render as "D^m:tail". See the individual functions for details.
"""

from ._braid3 import (
    CapExceeded,
    WordParseError,
    __version__,
    all_normal_forms,
    are_conjugate,
    class_report,
    coincidence,
    conjugate_by_simple,
    cyclic_class,
    delta_free_words,
    enumerate_classes,
    find_ccbar_power,
    infimum,
    normal_form,
    positive_conjugates,
    reflect,
    relation_neighbors,
    representatives,
    rotate,
    shape_condition,
    suite_names,
    tail,
    verify_suite,
)

__all__ = [
    "CapExceeded",
    "WordParseError",
    "__version__",
    "all_normal_forms",
    "are_conjugate",
    "class_report",
    "coincidence",
    "conjugate_by_simple",
    "cyclic_class",
    "delta_free_words",
    "enumerate_classes",
    "find_ccbar_power",
    "infimum",
    "normal_form",
    "positive_conjugates",
    "reflect",
    "relation_neighbors",
    "representatives",
    "rotate",
    "shape_condition",
    "suite_names",
    "tail",
    "verify_suite",
]
