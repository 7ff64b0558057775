#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ccode/bitvec.hpp"
#include "ccode/params.hpp"

namespace ccode {

enum class CodewordFormat { text01, binary };

// Text format: one line of '0'/'1' characters, character 0 = address 0.
// Binary format: 32-bit little-endian length header, then 8 bits per byte
// with address 0 in the least significant bit of byte 0.
void save_codeword(std::ostream& out, const Codeword& cw, CodewordFormat format);
Codeword load_codeword(std::istream& in, CodewordFormat format);

void save_codeword_file(const std::string& path, const Codeword& cw, CodewordFormat format);
Codeword load_codeword_file(const std::string& path, CodewordFormat format);

// Message files: one message per line as a '0'/'1' string, MSB first.
// Blank lines and lines starting with '#' are skipped.
std::vector<Message> load_messages(std::istream& in);
std::vector<Message> load_messages_file(const std::string& path);
void save_messages(std::ostream& out, std::span<const Message> messages);

} // namespace ccode
