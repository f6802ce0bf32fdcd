#include "onemap/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace onemap {

namespace {

std::vector<Text> parse_fasta(const std::string& raw) {
    std::vector<Text> out;
    std::istringstream in(raw);
    std::string line, id, seq;
    auto emit = [&] {
        if (id.empty() && seq.empty()) return;
        Text t = make_text(seq);
        t.record_id = id;
        out.push_back(std::move(t));
        id.clear();
        seq.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '>') {
            emit();
            size_t end = line.find_first_of(" \t", 1);
            id = line.substr(1, end == std::string::npos ? std::string::npos : end - 1);
        } else {
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
    }
    emit();
    return out;
}

} // namespace

std::vector<Text> load_texts(std::istream& in, InputFormat format) {
    std::string raw(std::istreambuf_iterator<char>(in), {});
    if (format == InputFormat::Auto) {
        size_t k = raw.find_first_not_of(" \t\r\n");
        format = (k != std::string::npos && raw[k] == '>') ? InputFormat::Fasta : InputFormat::Plain;
    }
    if (format == InputFormat::Fasta) return parse_fasta(raw);
    while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
    std::vector<Text> out;
    out.push_back(make_text(raw));
    return out;
}

} // namespace onemap
