#include "mindist/io.hpp"

#include <fstream>
#include <sstream>

#include "mindist/errors.hpp"

namespace mindist {

namespace {

// Token reader that tracks line numbers for error messages.
class TokenStream {
  public:
    TokenStream(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}

    int line() const { return line_; }
    const std::string& path() const { return path_; }

    long long next_int(const char* what) {
        std::string tok = next_token(what);
        try {
            size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(path_, line_, std::string("expected integer for ") + what +
                                               ", got '" + tok + "'");
        }
    }

  private:
    std::string next_token(const char* what) {
        std::string tok;
        int c;
        while ((c = in_.get()) != EOF) {
            if (c == '\n') ++line_;
            if (!isspace(c)) break;
        }
        if (c == EOF) throw ParseError(path_, line_, std::string("unexpected end of file, expected ") + what);
        tok.push_back(static_cast<char>(c));
        while ((c = in_.get()) != EOF && !isspace(c)) tok.push_back(static_cast<char>(c));
        if (c == '\n') ++line_;
        return tok;
    }

    std::istream& in_;
    std::string path_;
    int line_ = 1;
};

}  // namespace

ParityCheckMatrix read_alist(std::istream& in, int q, const std::string& path) {
    if (!field_supported(q)) throw ConfigError("unsupported field order q=" + std::to_string(q));
    TokenStream ts(in, path);
    long long n = ts.next_int("column count n");
    long long r = ts.next_int("row count r");
    if (n <= 0 || r <= 0 || n > 1 << 20 || r > 1 << 20)
        throw ParseError(path, ts.line(), "implausible matrix dimensions");
    long long maxc = ts.next_int("max column degree");
    long long maxr = ts.next_int("max row degree");
    if (maxc < 0 || maxr < 0 || maxc > r || maxr > n)
        throw ParseError(path, ts.line(), "degree bounds out of range");

    std::vector<int> cdeg(n), rdeg(r);
    for (long long i = 0; i < n; ++i) {
        cdeg[i] = static_cast<int>(ts.next_int("column degree"));
        if (cdeg[i] < 0 || cdeg[i] > maxc)
            throw ParseError(path, ts.line(), "column degree out of range");
    }
    for (long long i = 0; i < r; ++i) {
        rdeg[i] = static_cast<int>(ts.next_int("row degree"));
        if (rdeg[i] < 0 || rdeg[i] > maxr)
            throw ParseError(path, ts.line(), "row degree out of range");
    }

    const bool coeffs = q > 2;
    ParityCheckMatrix h(q, static_cast<int>(r), static_cast<int>(n));

    // column adjacency: fills the matrix
    for (long long c = 0; c < n; ++c) {
        int seen = 0;
        for (long long t = 0; t < maxc; ++t) {
            long long idx = ts.next_int("row index");
            long long coef = coeffs ? ts.next_int("coefficient") : 1;
            if (idx == 0) {
                if (coef != 0 && coeffs)
                    throw ParseError(path, ts.line(), "padding entry with nonzero coefficient");
                continue;
            }
            if (idx < 1 || idx > r) throw ParseError(path, ts.line(), "row index out of range");
            if (coef < 1 || coef >= q)
                throw ParseError(path, ts.line(), "coefficient out of range for GF(q)");
            h.set(static_cast<int>(idx - 1), static_cast<int>(c), static_cast<uint8_t>(coef));
            ++seen;
        }
        if (seen != cdeg[c])
            throw ParseError(path, ts.line(),
                             "column " + std::to_string(c + 1) + " lists " + std::to_string(seen) +
                                 " entries, degree says " + std::to_string(cdeg[c]));
    }
    // row adjacency: must agree with the column lists
    for (long long row = 0; row < r; ++row) {
        int seen = 0;
        for (long long t = 0; t < maxr; ++t) {
            long long idx = ts.next_int("column index");
            long long coef = coeffs ? ts.next_int("coefficient") : 1;
            if (idx == 0) continue;
            if (idx < 1 || idx > n) throw ParseError(path, ts.line(), "column index out of range");
            uint8_t have = h.at(static_cast<int>(row), static_cast<int>(idx - 1));
            if (have == 0)
                throw ParseError(path, ts.line(),
                                 "row list names entry (" + std::to_string(row + 1) + "," +
                                     std::to_string(idx) + ") absent from the column lists");
            if (coeffs && have != coef)
                throw ParseError(path, ts.line(), "row/column coefficient mismatch at (" +
                                                      std::to_string(row + 1) + "," +
                                                      std::to_string(idx) + ")");
            ++seen;
        }
        if (seen != rdeg[row])
            throw ParseError(path, ts.line(), "row " + std::to_string(row + 1) +
                                                  " degree mismatch");
        if (seen != h.row_weight(static_cast<int>(row)))
            throw ParseError(path, ts.line(), "row " + std::to_string(row + 1) +
                                                  " disagrees with column lists");
    }
    return h;
}

ParityCheckMatrix read_alist_file(const std::string& path, int q) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return read_alist(in, q, path);
}

void write_alist(std::ostream& out, const ParityCheckMatrix& h) {
    const bool coeffs = h.q() > 2;
    const int n = h.cols(), r = h.rows();
    int maxc = h.max_col_weight(), maxr = h.max_row_weight();
    out << n << " " << r << "\n" << maxc << " " << maxr << "\n";
    for (int c = 0; c < n; ++c) out << h.col_weight(c) << (c + 1 < n ? " " : "\n");
    for (int i = 0; i < r; ++i) out << h.row_weight(i) << (i + 1 < r ? " " : "\n");
    // column adjacency
    std::vector<std::vector<std::pair<int, uint8_t>>> cols(n);
    for (int i = 0; i < r; ++i)
        for (auto [c, v] : h.row_entries(i)) cols[c].push_back({i, v});
    auto emit = [&](const std::vector<std::pair<int, uint8_t>>& list, int pad) {
        bool first = true;
        for (auto [idx, v] : list) {
            if (!first) out << " ";
            first = false;
            out << idx + 1;
            if (coeffs) out << " " << static_cast<int>(v);
        }
        for (int t = static_cast<int>(list.size()); t < pad; ++t) {
            if (!first) out << " ";
            first = false;
            out << 0;
            if (coeffs) out << " " << 0;
        }
        out << "\n";
    };
    for (int c = 0; c < n; ++c) emit(cols[c], maxc);
    for (int i = 0; i < r; ++i) emit(h.row_entries(i), maxr);
}

void write_alist_file(const std::string& path, const ParityCheckMatrix& h) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    write_alist(out, h);
}

QuatVector parse_pauli_line(const std::string& line) {
    QuatVector v(static_cast<int>(line.size()));
    for (size_t j = 0; j < line.size(); ++j) {
        switch (line[j]) {
            case 'I': break;
            case 'Z': v.set(static_cast<int>(j), 1); break;
            case 'X': v.set(static_cast<int>(j), 2); break;
            case 'Y': v.set(static_cast<int>(j), 3); break;
            default:
                throw ParseError("<pauli>", 0, std::string("bad Pauli character '") + line[j] + "'");
        }
    }
    return v;
}

StabilizerCode read_pauli(std::istream& in, const std::string& path) {
    std::vector<QuatVector> gens;
    std::string line;
    int lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        if (trimmed.empty()) continue;
        for (char& c : trimmed) c = static_cast<char>(toupper(static_cast<unsigned char>(c)));
        for (char c : trimmed)
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
                throw ParseError(path, lineno, std::string("bad Pauli character '") + c + "'");
        if (n < 0)
            n = static_cast<int>(trimmed.size());
        else if (static_cast<int>(trimmed.size()) != n)
            throw ParseError(path, lineno, "generator length differs from previous lines");
        gens.push_back(parse_pauli_line(trimmed));
    }
    if (gens.empty()) throw ParseError(path, lineno, "no generators found");
    StabilizerCode s(std::move(gens));
    ValidationReport rep = validate_stabilizer(s);
    if (!rep.ok) throw ValidationError(path + ": " + rep.issues.front());
    return s;
}

StabilizerCode read_pauli_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return read_pauli(in, path);
}

std::string pauli_string(const QuatVector& v) {
    static const char sym[4] = {'I', 'Z', 'X', 'Y'};
    std::string s(v.n(), 'I');
    for (int j = 0; j < v.n(); ++j) s[j] = sym[v.get(j)];
    return s;
}

void write_pauli(std::ostream& out, const StabilizerCode& s) {
    for (const auto& g : s.generators()) out << pauli_string(g) << "\n";
}

void write_pauli_file(const std::string& path, const StabilizerCode& s) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    write_pauli(out, s);
}

std::vector<uint8_t> read_syndrome_file(const std::string& path, int q) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::vector<uint8_t> out;
    long long v;
    while (in >> v) {
        if (v < 0 || v >= q) throw ParseError(path, 0, "syndrome entry out of range for GF(q)");
        out.push_back(static_cast<uint8_t>(v));
    }
    if (out.empty()) throw ParseError(path, 0, "empty syndrome file");
    return out;
}

}  // namespace mindist
