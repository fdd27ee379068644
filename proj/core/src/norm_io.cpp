#include "finsler/norm_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "finsler/dsl.hpp"

namespace finsler {

namespace {

using dsl::ParseError;

struct Field {
    std::string value;
    int line = 0;
};

// key = value lines, '#' comments, blank lines ignored.
std::map<std::string, Field> read_fields(std::string_view text) {
    std::map<std::string, Field> fields;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", lineno, 1);
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("missing key before '='", lineno, 1);
        if (fields.count(key)) throw ParseError("duplicate key '" + key + "'", lineno, 1);
        fields[key] = Field{value, lineno};
    }
    return fields;
}

class ValueParser {
public:
    ValueParser(const std::string& text, int line) : text_(text), line_(line) {}

    double number() {
        skip_space();
        char* end = nullptr;
        const double v = std::strtod(text_.c_str() + pos_, &end);
        if (end == text_.c_str() + pos_) {
            throw ParseError("expected a number", line_, column());
        }
        pos_ = static_cast<std::size_t>(end - text_.c_str());
        return v;
    }

    Vector vector() {
        expect('[');
        std::vector<double> vals;
        while (true) {
            vals.push_back(number());
            skip_space();
            if (peek() == ',') { ++pos_; continue; }
            break;
        }
        expect(']');
        return Eigen::Map<Vector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
    }

    Matrix matrix() {
        expect('[');
        std::vector<Vector> rows;
        while (true) {
            rows.push_back(vector());
            skip_space();
            if (peek() == ',') { ++pos_; continue; }
            break;
        }
        expect(']');
        const Eigen::Index n = rows.front().size();
        Matrix m(static_cast<Eigen::Index>(rows.size()), n);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != n) {
                throw ParseError("ragged matrix rows", line_, column());
            }
            m.row(static_cast<Eigen::Index>(i)) = rows[i];
        }
        return m;
    }

    long long integer() {
        const double v = number();
        const long long i = static_cast<long long>(v);
        if (static_cast<double>(i) != v) {
            throw ParseError("expected an integer", line_, column());
        }
        return i;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input in value", line_, column());
        }
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    int column() const { return static_cast<int>(pos_) + 1; }
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "'", line_, column());
        }
        ++pos_;
    }

    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
};

const Field& require(const std::map<std::string, Field>& fields, const std::string& key,
                     const char* context) {
    const auto it = fields.find(key);
    if (it == fields.end()) {
        throw ParseError(std::string(context) + " requires a '" + key + "' entry", 1, 1);
    }
    return it->second;
}

void reject_unknown(const std::map<std::string, Field>& fields,
                    std::initializer_list<const char*> allowed) {
    for (const auto& [key, field] : fields) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ParseError("unknown key '" + key + "'", field.line, 1);
    }
}

}  // namespace

FinslerNorm parse_norm_definition(std::string_view text) {
    const auto fields = read_fields(text);
    if (fields.empty()) throw ParseError("empty norm definition", 1, 1);

    if (fields.count("family")) {
        const std::string& family = fields.at("family").value;
        if (family == "riemannian") {
            reject_unknown(fields, {"family", "A"});
            ValueParser p(require(fields, "A", "riemannian").value, fields.at("A").line);
            Matrix A = p.matrix();
            p.finish();
            return FinslerNorm::riemannian(std::move(A));
        }
        if (family == "randers") {
            reject_unknown(fields, {"family", "A", "b"});
            ValueParser pa(require(fields, "A", "randers").value, fields.at("A").line);
            Matrix A = pa.matrix();
            pa.finish();
            ValueParser pb(require(fields, "b", "randers").value, fields.at("b").line);
            Vector b = pb.vector();
            pb.finish();
            return FinslerNorm::randers(std::move(A), std::move(b));
        }
        if (family == "mthroot") {
            reject_unknown(fields, {"family", "m", "c"});
            ValueParser pm(require(fields, "m", "mthroot").value, fields.at("m").line);
            const long long m = pm.integer();
            pm.finish();
            ValueParser pc(require(fields, "c", "mthroot").value, fields.at("c").line);
            Vector c = pc.vector();
            pc.finish();
            return FinslerNorm::mth_root(static_cast<int>(m), std::move(c));
        }
        throw ParseError("unknown family '" + family + "'", fields.at("family").line, 1);
    }

    reject_unknown(fields, {"dim", "F"});
    const Field& dim_field = require(fields, "dim", "expression form");
    ValueParser pd(dim_field.value, dim_field.line);
    const long long dim = pd.integer();
    pd.finish();
    if (dim < 2 || dim > 64) {
        throw ParseError("dim must be between 2 and 64", dim_field.line, 1);
    }
    const Field& f_field = require(fields, "F", "expression form");
    return dsl::to_norm(dsl::parse(f_field.value, static_cast<int>(dim)));
}

FinslerNorm load_norm_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open norm file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_norm_definition(buf.str());
}

}  // namespace finsler
