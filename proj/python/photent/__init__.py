# Copyright 2026 The photent Authors
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
"""Exact simulation of entanglement generated by linear-optical interferometers."""

from ._photent import (
    amplitude,
    average_entanglement,
    bell_cost,
    bunched_entropy,
    dimension,
    dimensionality_bound,
    dual_rail_ent_yield,
    entropy,
    fixture,
    fock_basis,
    generator_of,
    haar_sample,
    herald,
    jensen_log3_bound,
    linearity_bound,
    mean_constrained_entropy_bound,
    minimize,
    output_state,
    permanent,
    realize,
)

__all__ = [
    "amplitude",
    "average_entanglement",
    "bell_cost",
    "bunched_entropy",
    "dimension",
    "dimensionality_bound",
    "dual_rail_ent_yield",
    "entropy",
    "fixture",
    "fock_basis",
    "generator_of",
    "haar_sample",
    "herald",
    "jensen_log3_bound",
    "linearity_bound",
    "mean_constrained_entropy_bound",
    "minimize",
    "output_state",
    "permanent",
    "realize",
]

__version__ = "0.1.0"
