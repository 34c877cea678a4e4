# Copyright 2026 The orderproof Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Decision procedure for quantifier-free partial and linear orders."""

from ._core import (
    InvariantError,
    ParseError,
    brute_sat,
    check,
    enumerate_posets,
    export_proof,
    normalize,
    run_cli,
    solve,
)

__all__ = [
    "InvariantError",
    "ParseError",
    "brute_sat",
    "check",
    "enumerate_posets",
    "export_proof",
    "normalize",
    "run_cli",
    "solve",
]
