// Copyright 2026 The selkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selkit/utf8.h"

namespace selkit {
namespace {

bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

int64_t CharLength(std::string_view text) {
  int64_t n = 0;
  for (unsigned char c : text) {
    if (!IsContinuation(c)) ++n;
  }
  return n;
}

size_t ByteOffset(std::string_view text, int64_t index) {
  if (index <= 0) return 0;
  int64_t seen = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!IsContinuation(static_cast<unsigned char>(text[i]))) {
      if (seen == index) return i;
      ++seen;
    }
  }
  return text.size();
}

int64_t CharOffset(std::string_view text, size_t byte_pos) {
  if (byte_pos > text.size()) byte_pos = text.size();
  return CharLength(text.substr(0, byte_pos));
}

std::string CharSubstr(std::string_view text, int64_t start, int64_t end) {
  if (end <= start) return {};
  size_t b = ByteOffset(text, start);
  size_t e = ByteOffset(text, end);
  return std::string(text.substr(b, e - b));
}

}  // namespace selkit
