#include "blockcensus/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace blockcensus {

const std::string* InstanceRecord::meta_value(const std::string& key) const {
    auto it = meta.find(key);
    return it == meta.end() ? nullptr : &it->second;
}

namespace {

bool parse_u32(const std::string& s, u32& out) {
    if (s.empty() || s.size() > 9) return false;
    u64 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    if (v > UINT32_MAX) return false;
    out = static_cast<u32>(v);
    return true;
}

}  // namespace

InstanceRecord parse_instance(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        throw ParseError(static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1,
                         "missing final newline");

    InstanceRecord rec;
    bool have_p = false, have_d = false, have_label = false;
    std::vector<std::pair<int, std::string>> gen_lines;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;

        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);

        if (key == "p") {
            if (have_p) throw ParseError(line_no, "duplicate key p");
            if (!parse_u32(value, rec.p)) throw ParseError(line_no, "bad integer for p");
            have_p = true;
        } else if (key == "d") {
            if (have_d) throw ParseError(line_no, "duplicate key d");
            if (!parse_u32(value, rec.d)) throw ParseError(line_no, "bad integer for d");
            have_d = true;
        } else if (key == "label") {
            if (have_label) throw ParseError(line_no, "duplicate key label");
            rec.label = value;
            have_label = true;
        } else if (key.rfind("meta.", 0) == 0) {
            const std::string name = key.substr(5);
            if (name.empty()) throw ParseError(line_no, "empty meta key");
            if (rec.meta.count(name)) throw ParseError(line_no, "duplicate key " + key);
            rec.meta[name] = value;
        } else if (key == "gen") {
            gen_lines.emplace_back(line_no, value);
        } else {
            throw ParseError(line_no, "unknown key " + key);
        }
    }

    if (!have_p) throw ValidationError("missing p");
    if (!have_d) throw ValidationError("missing d");
    if (gen_lines.empty()) throw ValidationError("missing gen");

    if (!is_prime(rec.p)) throw ValidationError("p not prime");
    if (rec.p < 5) throw ValidationError("p must be >= 5");
    if (rec.d < 1 || rec.d > 4) throw ValidationError("d must be in [1,4]");
    for (char c : rec.label)
        if (std::isspace(static_cast<unsigned char>(c))) throw ValidationError("label contains whitespace");

    for (const auto& [ln, value] : gen_lines) {
        std::vector<u32> entries;
        std::size_t i = 0;
        const std::size_t need = (std::size_t)rec.d * rec.d;
        while (i < value.size()) {
            std::size_t j = value.find(' ', i);
            if (j == std::string::npos) j = value.size();
            u32 e = 0;
            if (j == i || !parse_u32(value.substr(i, j - i), e))
                throw ParseError(ln, "bad generator entry");
            if (e >= rec.p) throw ParseError(ln, "generator entry not in [0,p)");
            entries.push_back(e);
            i = j + 1;
        }
        if (entries.size() != need)
            throw ParseError(ln, "generator needs " + std::to_string(need) + " entries");
        Mat m = make_mat(rec.p, rec.d, std::move(entries));
        if (std::find(rec.generators.begin(), rec.generators.end(), m) != rec.generators.end())
            throw ValidationError("duplicate generator");
        rec.generators.push_back(std::move(m));
    }

    for (const Mat& g : rec.generators) {
        try {
            mat_inv(g);
        } catch (const SingularMatrixError&) {
            throw ValidationError("singular generator");
        }
    }

    // p'-complement condition: the group generated must avoid the prime p
    const u64 order = group_order(instance_group(rec));
    if (order % rec.p == 0) throw ValidationError("p divides the group order");

    return rec;
}

std::string serialize_instance(const InstanceRecord& rec) {
    std::ostringstream out;
    out << "p=" << rec.p << "\n";
    out << "d=" << rec.d << "\n";
    if (!rec.label.empty()) out << "label=" << rec.label << "\n";
    for (const auto& [key, value] : rec.meta) out << "meta." << key << "=" << value << "\n";
    for (const Mat& g : rec.generators) {
        out << "gen=";
        for (std::size_t i = 0; i < g.a.size(); ++i) {
            if (i) out << ' ';
            out << g.a[i];
        }
        out << "\n";
    }
    return out.str();
}

InstanceRecord load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open instance file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line, path + ":" + std::to_string(e.line) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

GroupHandle instance_group(const InstanceRecord& rec) {
    return GroupHandle::from_generators(rec.p, rec.d, rec.generators);
}

}  // namespace blockcensus
