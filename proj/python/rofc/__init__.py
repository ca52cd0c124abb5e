# Copyright 2026 The rofc authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Cancelable biometric templates with fuzzy-commitment key binding."""

from rofc._core import (
    AuthDecision,
    BitString,
    CodecSpec,
    Dataset,
    DeviceRecord,
    EerResult,
    EnrollmentResult,
    Error,
    HelperData,
    QuantizerSettings,
    RateCurve,
    RatePoint,
    Seed,
    ServerRecord,
    Subject,
    authenticate,
    baseline_rates,
    commit,
    compute_eer,
    decode,
    encode,
    enroll,
    gen_synthetic,
    load_dataset,
    protected_rates,
    recover,
    revoke_and_reissue,
    save_dataset,
    threshold_schedule,
    verify,
)

__all__ = [
    "AuthDecision",
    "BitString",
    "CodecSpec",
    "Dataset",
    "DeviceRecord",
    "EerResult",
    "EnrollmentResult",
    "Error",
    "HelperData",
    "QuantizerSettings",
    "RateCurve",
    "RatePoint",
    "Seed",
    "ServerRecord",
    "Subject",
    "authenticate",
    "baseline_rates",
    "commit",
    "compute_eer",
    "decode",
    "encode",
    "enroll",
    "gen_synthetic",
    "load_dataset",
    "protected_rates",
    "recover",
    "revoke_and_reissue",
    "save_dataset",
    "threshold_schedule",
    "verify",
]
