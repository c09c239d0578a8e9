// Copyright 2026 The cto Authors.
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

#include "cto/text/utf8.h"

namespace cto::text {

char32_t DecodeAt(std::string_view s, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  const unsigned char lead = byte(pos);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int i = 1; i <= extra; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

char32_t Lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

char32_t Upper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  return cp;
}

template <typename Fn>
std::string MapCodepoints(std::string_view s, Fn fn) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) AppendUtf8(out, fn(DecodeAt(s, pos)));
  return out;
}

// Base letter for Latin-1 supplement and common Latin Extended-A letters;
// 0 when the code point has no mapping.
const char* BaseLetter(char32_t cp) {
  switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
      return "A";
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
      return "a";
    case 0xC6: return "AE";
    case 0xE6: return "ae";
    case 0xC7: return "C";
    case 0xE7: return "c";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB: return "E";
    case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF: return "I";
    case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
    case 0xD1: return "N";
    case 0xF1: return "n";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
      return "O";
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
      return "o";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC: return "U";
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
    case 0xDD: return "Y";
    case 0xFD: case 0xFF: return "y";
    case 0xDF: return "ss";
    case 0x106: case 0x10C: return "C";
    case 0x107: case 0x10D: return "c";
    case 0x141: return "L";
    case 0x142: return "l";
    case 0x143: case 0x147: return "N";
    case 0x144: case 0x148: return "n";
    case 0x158: return "R";
    case 0x159: return "r";
    case 0x15A: case 0x160: return "S";
    case 0x15B: case 0x161: return "s";
    case 0x179: case 0x17B: case 0x17D: return "Z";
    case 0x17A: case 0x17C: case 0x17E: return "z";
    default: return nullptr;
  }
}

}  // namespace

std::string FoldCase(std::string_view s) { return MapCodepoints(s, Lower); }

std::string UpperCase(std::string_view s) { return MapCodepoints(s, Upper); }

std::string StripDiacritics(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = DecodeAt(s, pos);
    if (const char* base = BaseLetter(cp)) {
      out += base;
    } else {
      AppendUtf8(out, cp);
    }
  }
  return out;
}

bool IsSpace(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || cp == 0x2009 || cp == 0x202F;
}

bool IsUpper(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

bool IsEdgePunctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
           (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
  }
  switch (cp) {
    case 0xAB: case 0xBB:                // « »
    case 0x2013: case 0x2014:            // en dash, em dash
    case 0x2018: case 0x2019: case 0x201A:
    case 0x201C: case 0x201D: case 0x201E:
    case 0x2026:                          // …
      return true;
    default:
      return false;
  }
}

bool StartsUpper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  return IsUpper(DecodeAt(s, pos));
}

std::string NormalizeWhitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = DecodeAt(s, pos);
    if (IsSpace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(s.substr(start, pos - start));
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t probe = pos;
    if (IsSpace(DecodeAt(s, probe))) {
      pos = probe;
      continue;
    }
    const std::size_t raw_begin = pos;
    std::size_t raw_end = pos;
    while (raw_end < s.size()) {
      std::size_t next = raw_end;
      if (IsSpace(DecodeAt(s, next))) break;
      raw_end = next;
    }
    pos = raw_end;

    std::size_t begin = raw_begin;
    while (begin < raw_end) {
      std::size_t next = begin;
      if (!IsEdgePunctuation(DecodeAt(s, next))) break;
      begin = next;
    }
    std::size_t end = raw_end;
    while (end > begin) {
      // Step back one code point.
      std::size_t prev = end - 1;
      while (prev > begin &&
             (static_cast<unsigned char>(s[prev]) & 0xC0) == 0x80) {
        --prev;
      }
      std::size_t probe_prev = prev;
      if (!IsEdgePunctuation(DecodeAt(s, probe_prev))) break;
      end = prev;
    }
    if (begin < end) {
      tokens.push_back(Token{s.substr(begin, end - begin), begin, end});
    }
  }
  return tokens;
}

std::size_t CodepointCount(std::string_view s) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    DecodeAt(s, pos);
    ++count;
  }
  return count;
}

std::size_t ByteOffsetOfCodepoint(std::string_view s, std::size_t index) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < index; ++i) {
    if (pos >= s.size()) return std::string_view::npos;
    DecodeAt(s, pos);
  }
  return pos;
}

}  // namespace cto::text
