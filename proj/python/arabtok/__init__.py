# Copyright 2026 The arabtok Authors
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
"""Arabic tokenization toolkit: normalization, clitic segmentation and
subword tokenizers (BPE, WordPiece, word-level, morph+BPE)."""

from arabtok._arabtok import (
    EvalError,
    ModelFormatError,
    Tokenizer,
    TrainingError,
    arabic_ratio,
    compare,
    default_clitics,
    default_normalizer,
    desegment_text,
    normalize,
    run_cli,
    segment_text,
    segment_word,
    train,
)

__all__ = [
    "EvalError",
    "ModelFormatError",
    "Tokenizer",
    "TrainingError",
    "arabic_ratio",
    "compare",
    "default_clitics",
    "default_normalizer",
    "desegment_text",
    "normalize",
    "run_cli",
    "segment_text",
    "segment_word",
    "train",
]
