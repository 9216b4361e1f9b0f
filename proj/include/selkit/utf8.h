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

#ifndef SELKIT_UTF8_H_
#define SELKIT_UTF8_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace selkit {

// Offsets throughout selkit count Unicode code points, not bytes. Malformed
// UTF-8 is tolerated: every byte that is not a continuation byte starts a
// new character.

int64_t CharLength(std::string_view text);

// Byte offset of character `index`. Clamped to text.size().
size_t ByteOffset(std::string_view text, int64_t index);

// Character offset of byte position `byte_pos`.
int64_t CharOffset(std::string_view text, size_t byte_pos);

// Substring by character offsets [start, end).
std::string CharSubstr(std::string_view text, int64_t start, int64_t end);

}  // namespace selkit

#endif  // SELKIT_UTF8_H_
