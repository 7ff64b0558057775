#include "ccode/codeword_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <span>

namespace ccode {

namespace {

void write_u32le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32le(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw Error("truncated codeword stream");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

} // namespace

void save_codeword(std::ostream& out, const Codeword& cw, CodewordFormat format) {
    if (format == CodewordFormat::text01) {
        out << cw.to_string() << '\n';
    } else {
        write_u32le(out, static_cast<std::uint32_t>(cw.size()));
        std::size_t n_bytes = (cw.size() + 7) / 8;
        for (std::size_t byte = 0; byte < n_bytes; ++byte) {
            unsigned char v = 0;
            for (std::size_t bit = 0; bit < 8; ++bit) {
                std::size_t i = byte * 8 + bit;
                if (i < cw.size() && cw.test(i)) v |= static_cast<unsigned char>(1u << bit);
            }
            out.put(static_cast<char>(v));
        }
    }
    if (!out) throw Error("failed to write codeword");
}

Codeword load_codeword(std::istream& in, CodewordFormat format) {
    if (format == CodewordFormat::text01) {
        std::string line;
        if (!std::getline(in, line)) throw Error("empty codeword stream");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return Codeword::from_string(line);
    }
    std::uint32_t len = read_u32le(in);
    Codeword cw(len);
    std::size_t n_bytes = (static_cast<std::size_t>(len) + 7) / 8;
    for (std::size_t byte = 0; byte < n_bytes; ++byte) {
        int c = in.get();
        if (c == std::char_traits<char>::eof()) throw Error("truncated codeword stream");
        for (std::size_t bit = 0; bit < 8; ++bit) {
            std::size_t i = byte * 8 + bit;
            if (i < len && ((static_cast<unsigned>(c) >> bit) & 1u)) cw.set(i);
        }
    }
    return cw;
}

void save_codeword_file(const std::string& path, const Codeword& cw, CodewordFormat format) {
    std::ofstream out(path, format == CodewordFormat::binary ? std::ios::binary : std::ios::out);
    if (!out) throw Error("cannot open for writing: " + path);
    save_codeword(out, cw, format);
}

Codeword load_codeword_file(const std::string& path, CodewordFormat format) {
    std::ifstream in(path, format == CodewordFormat::binary ? std::ios::binary : std::ios::in);
    if (!in) throw Error("cannot open for reading: " + path);
    return load_codeword(in, format);
}

std::vector<Message> load_messages(std::istream& in) {
    std::vector<Message> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_message(line));
    }
    return out;
}

std::vector<Message> load_messages_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open for reading: " + path);
    return load_messages(in);
}

void save_messages(std::ostream& out, std::span<const Message> messages) {
    for (const auto& m : messages) out << format_message(m) << '\n';
    if (!out) throw Error("failed to write messages");
}

} // namespace ccode
