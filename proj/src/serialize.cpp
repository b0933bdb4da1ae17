// SPDX-License-Identifier: Apache-2.0
#include "ihopf/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ihopf {

BialgebraPresentation PresentationFile::to_presentation() const {
    if (kind != FileKind::presentation) throw DomainError("file does not hold a presentation");
    BialgebraPresentation P;
    P.dim = dim;
    P.field = field;
    P.basis_labels = basis_labels;
    P.F = F;
    P.G = G;
    P.lambda = lambda;
    P.mu = mu;
    P.antipode = antipode;
    P.validate_shape();
    return P;
}

IAlgebra PresentationFile::to_ialgebra() const {
    if (kind != FileKind::ialgebra) throw DomainError("file does not hold a diamond algebra");
    IAlgebra I;
    I.dim = dim;
    I.field = field;
    I.basis_labels = basis_labels;
    I.iF = F;
    I.lambda = lambda;
    I.source = note.value_or("");
    return I;
}

PresentationFile make_file(const BialgebraPresentation& P, std::map<std::string, Matrix> witnesses,
                           std::optional<std::string> note) {
    P.validate_shape();
    PresentationFile f;
    f.kind = FileKind::presentation;
    f.field = P.field;
    f.dim = P.dim;
    f.basis_labels = P.basis_labels;
    f.F = P.F;
    f.G = P.G;
    f.lambda = P.lambda;
    f.mu = P.mu;
    f.antipode = P.antipode;
    f.witnesses = std::move(witnesses);
    f.note = std::move(note);
    return f;
}

PresentationFile make_file(const IAlgebra& I) {
    PresentationFile f;
    f.kind = FileKind::ialgebra;
    f.field = I.field;
    f.dim = I.dim;
    f.basis_labels = I.basis_labels;
    f.F = I.iF;
    f.lambda = I.lambda;
    if (!I.source.empty()) f.note = I.source;
    return f;
}

PresentationFile make_matrix_file(const Matrix& M) {
    if (M.rows() != M.cols()) throw DomainError("matrix files hold square matrices");
    PresentationFile f;
    f.kind = FileKind::matrix;
    f.field = M.field();
    f.dim = M.rows();
    f.matrix = M;
    return f;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

const char* kind_word(FileKind k) {
    switch (k) {
        case FileKind::presentation: return "presentation";
        case FileKind::ialgebra: return "ialgebra";
        case FileKind::matrix: return "matrix";
    }
    return "";
}

void emit_tensor(std::ostream& os, const char* name, const StructureTensor& T) {
    const unsigned n = T.dim();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k)
                if (!T.at(i, j, k).is_zero())
                    os << name << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << " = "
                       << T.at(i, j, k).to_text() << '\n';
}

void emit_matrix(std::ostream& os, const std::string& prefix, const Matrix& M) {
    for (unsigned i = 0; i < M.rows(); ++i)
        for (unsigned j = 0; j < M.cols(); ++j)
            if (!M.at(i, j).is_zero())
                os << prefix << ' ' << i + 1 << ' ' << j + 1 << " = " << M.at(i, j).to_text()
                   << '\n';
}

}  // namespace

std::string serialize(const PresentationFile& f) {
    std::ostringstream os;
    os << "ihopf-file v" << f.format_version << '\n';
    os << "kind " << kind_word(f.kind) << '\n';
    os << "field " << f.field.to_string() << '\n';
    os << "dim " << f.dim << '\n';
    if (f.kind == FileKind::matrix) {
        emit_matrix(os, "entry", *f.matrix);
    } else {
        for (unsigned i = 0; i < f.dim; ++i)
            os << "basis " << i + 1 << " \"" << f.basis_labels[i] << "\"\n";
        emit_tensor(os, "F", f.F);
        if (f.kind == FileKind::presentation) emit_tensor(os, "G", f.G);
        for (unsigned i = 0; i < f.dim; ++i)
            os << "lambda " << i + 1 << " = " << f.lambda[i].to_text() << '\n';
        if (f.kind == FileKind::presentation) {
            for (unsigned i = 0; i < f.dim; ++i)
                os << "mu " << i + 1 << " = " << f.mu[i].to_text() << '\n';
            if (f.antipode) emit_matrix(os, "antipode", *f.antipode);
            for (const auto& [name, M] : f.witnesses) emit_matrix(os, "witness \"" + name + "\"", M);
        }
    }
    if (f.note) os << "note \"" << *f.note << "\"\n";
    os << "end\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct LineParser {
    std::string_view text;
    std::size_t line_no;
    std::size_t pos = 0;

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, line_no, pos + 1); }

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }

    std::string word() {
        skip_spaces();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ' ') ++pos;
        if (start == pos) error("expected a token");
        return std::string(text.substr(start, pos - start));
    }

    unsigned long integer(const char* what) {
        std::string w = word();
        if (w.empty() || w.size() > 18) error(std::string(what) + " must be a positive integer");
        for (char c : w)
            if (c < '0' || c > '9') error(std::string(what) + " must be a positive integer");
        return std::strtoul(w.c_str(), nullptr, 10);
    }

    unsigned index(unsigned dim, const char* what) {
        unsigned long v = integer(what);
        if (v < 1 || v > dim)
            error(std::string(what) + " index " + std::to_string(v) + " out of range 1.." +
                  std::to_string(dim));
        return static_cast<unsigned>(v - 1);
    }

    void expect_line_end() {
        skip_spaces();
        if (pos < text.size()) error("trailing characters");
    }

    std::string quoted(const char* what) {
        skip_spaces();
        if (pos >= text.size() || text[pos] != '"') error(std::string(what) + " must be quoted");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '"') ++pos;
        if (pos >= text.size()) error("unterminated quote");
        std::string s(text.substr(start, pos - start));
        ++pos;
        return s;
    }

    void expect_eq() {
        skip_spaces();
        if (pos >= text.size() || text[pos] != '=') error("expected '='");
        ++pos;
    }

    std::string_view rest() {
        skip_spaces();
        return text.substr(pos);
    }

    Scalar scalar(const FieldSpec& f) {
        expect_eq();
        std::string_view t = rest();
        try {
            return Scalar::parse(f, t);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no, pos + 1);
        }
    }
};

}  // namespace

PresentationFile parse_file(std::string_view text) {
    PresentationFile f;
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }

    std::size_t li = 0;
    auto next_line = [&](bool required) -> std::optional<LineParser> {
        while (li < lines.size()) {
            std::string_view l = lines[li];
            ++li;
            // strip trailing CR for files written on other platforms
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            std::string_view stripped = l;
            while (!stripped.empty() && stripped.front() == ' ') stripped.remove_prefix(1);
            if (stripped.empty() || stripped.front() == '#') continue;
            return LineParser{l, li, 0};
        }
        if (required) throw ParseError("unexpected end of file", lines.size(), 1);
        return std::nullopt;
    };

    // header
    {
        LineParser lp = *next_line(true);
        std::string w = lp.word();
        if (w != "ihopf-file") lp.error("expected header 'ihopf-file v1'");
        std::string v = lp.word();
        if (v != "v1") lp.error("unsupported format version '" + v + "'");
        f.format_version = 1;
        lp.expect_line_end();
    }
    {
        LineParser lp = *next_line(true);
        if (lp.word() != "kind") lp.error("expected 'kind' line");
        std::string k = lp.word();
        if (k == "presentation")
            f.kind = FileKind::presentation;
        else if (k == "ialgebra")
            f.kind = FileKind::ialgebra;
        else if (k == "matrix")
            f.kind = FileKind::matrix;
        else
            lp.error("unknown kind '" + k + "'");
        lp.expect_line_end();
    }
    {
        LineParser lp = *next_line(true);
        if (lp.word() != "field") lp.error("expected 'field' line");
        std::string k = lp.word();
        try {
            if (k == "rational") {
                f.field = FieldSpec::rationals();
            } else if (k == "prime") {
                f.field = FieldSpec::prime_field(lp.integer("prime modulus"));
            } else if (k == "cyclotomic") {
                f.field = FieldSpec::cyclotomic(static_cast<unsigned>(lp.integer("order")));
            } else {
                lp.error("unknown field kind '" + k + "'");
            }
        } catch (const DomainError& e) {
            lp.error(e.what());
        }
        lp.expect_line_end();
    }
    {
        LineParser lp = *next_line(true);
        if (lp.word() != "dim") lp.error("expected 'dim' line");
        unsigned long v = lp.integer("dim");
        if (v < 1 || v > 4096) lp.error("dim out of range 1..4096");
        f.dim = static_cast<unsigned>(v);
        lp.expect_line_end();
    }

    const unsigned n = f.dim;
    const bool is_pres = f.kind == FileKind::presentation;
    const bool is_matrix = f.kind == FileKind::matrix;
    if (!is_matrix) {
        f.basis_labels.assign(n, {});
        f.F = StructureTensor(f.field, n);
        if (is_pres) f.G = StructureTensor(f.field, n);
        f.lambda.assign(n, Scalar::zero(f.field));
        if (is_pres) f.mu.assign(n, Scalar::zero(f.field));
    } else {
        f.matrix = Matrix(f.field, n, n);
    }
    std::vector<bool> label_seen(n, false), lambda_seen(n, false), mu_seen(n, false);
    bool saw_end = false;

    while (auto lpo = next_line(true)) {
        LineParser lp = *lpo;
        std::string w = lp.word();
        if (w == "end") {
            lp.expect_line_end();
            saw_end = true;
            break;
        }
        if (w == "note") {
            f.note = lp.quoted("note");
            lp.expect_line_end();
            continue;
        }
        if (is_matrix) {
            if (w != "entry") lp.error("matrix files only hold 'entry' lines, got '" + w + "'");
            unsigned i = lp.index(n, "row");
            unsigned j = lp.index(n, "column");
            f.matrix->at(i, j) = lp.scalar(f.field);
            continue;
        }
        if (w == "basis") {
            unsigned i = lp.index(n, "basis");
            if (label_seen[i]) lp.error("duplicate basis label for index " + std::to_string(i + 1));
            label_seen[i] = true;
            f.basis_labels[i] = lp.quoted("basis label");
            lp.expect_line_end();
        } else if (w == "F" || (w == "G" && is_pres)) {
            unsigned i = lp.index(n, "i");
            unsigned j = lp.index(n, "j");
            unsigned k = lp.index(n, "k");
            StructureTensor& T = (w == "F") ? f.F : f.G;
            if (!T.at(i, j, k).is_zero()) lp.error("duplicate " + w + " entry");
            T.at(i, j, k) = lp.scalar(f.field);
        } else if (w == "lambda") {
            unsigned i = lp.index(n, "lambda");
            if (lambda_seen[i]) lp.error("duplicate lambda entry");
            lambda_seen[i] = true;
            f.lambda[i] = lp.scalar(f.field);
        } else if (w == "mu" && is_pres) {
            unsigned i = lp.index(n, "mu");
            if (mu_seen[i]) lp.error("duplicate mu entry");
            mu_seen[i] = true;
            f.mu[i] = lp.scalar(f.field);
        } else if (w == "antipode" && is_pres) {
            if (!f.antipode) f.antipode = Matrix(f.field, n, n);
            unsigned i = lp.index(n, "row");
            unsigned j = lp.index(n, "column");
            f.antipode->at(i, j) = lp.scalar(f.field);
        } else if (w == "witness" && is_pres) {
            std::string name = lp.quoted("witness name");
            auto [it, inserted] = f.witnesses.try_emplace(name, Matrix(f.field, n, n));
            (void)inserted;
            unsigned i = lp.index(n, "row");
            unsigned j = lp.index(n, "column");
            it->second.at(i, j) = lp.scalar(f.field);
        } else {
            lp.error("unknown directive '" + w + "' for this file kind");
        }
    }
    if (!saw_end) throw ParseError("missing 'end' line", lines.size(), 1);

    if (!is_matrix) {
        for (unsigned i = 0; i < n; ++i) {
            if (!label_seen[i])
                throw ParseError("missing basis label " + std::to_string(i + 1), lines.size(), 1);
            if (!lambda_seen[i])
                throw ParseError("missing lambda entry " + std::to_string(i + 1), lines.size(), 1);
            if (is_pres && !mu_seen[i])
                throw ParseError("missing mu entry " + std::to_string(i + 1), lines.size(), 1);
        }
    }
    return f;
}

void save(const PresentationFile& file, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DomainError("cannot open '" + path + "' for writing");
    os << serialize(file);
    if (!os) throw DomainError("write to '" + path + "' failed");
}

PresentationFile load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DomainError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_file(buf.str());
}

// ---------------------------------------------------------------------------
// table rendering

namespace {

std::string coefficient_text(const Scalar& c) {
    if (c.is_rational_constant()) {
        mpq_class q = c.rational_value();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    return c.to_text();
}

}  // namespace

std::string render_element(const std::vector<Scalar>& coords,
                           const std::vector<std::string>& labels) {
    std::string out;
    const Scalar* any = coords.empty() ? nullptr : &coords[0];
    Scalar one = any ? Scalar::one(any->field()) : Scalar();
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const Scalar& c = coords[k];
        if (c.is_zero()) continue;
        std::string term;
        if (c == one)
            term = labels[k];
        else if (c == -one)
            term = "-" + labels[k];
        else
            term = coefficient_text(c) + "*" + labels[k];
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::string render_table(const StructureTensor& T, const std::vector<std::string>& labels) {
    const unsigned n = T.dim();
    if (labels.size() != n) throw DomainError("label count != tensor dim");
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::vector<Scalar> coords(n, Scalar::zero(T.field()));
            for (unsigned k = 0; k < n; ++k) coords[k] = T.at(i, j, k);
            cells[i][j] = render_element(coords, labels);
        }
    std::size_t rw = 1;  // row-label column width; header corner is "*"
    for (const auto& l : labels) rw = std::max(rw, l.size());
    std::vector<std::size_t> cw(n);
    for (unsigned j = 0; j < n; ++j) {
        cw[j] = labels[j].size();
        for (unsigned i = 0; i < n; ++i) cw[j] = std::max(cw[j], cells[i][j].size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::ostringstream os;
    os << pad("*", rw) << " |";
    for (unsigned j = 0; j < n; ++j) os << ' ' << pad(labels[j], cw[j]);
    os << '\n';
    os << std::string(rw + 1, '-') << '+';
    std::size_t total = 0;
    for (unsigned j = 0; j < n; ++j) total += cw[j] + 1;
    os << std::string(total, '-') << '\n';
    for (unsigned i = 0; i < n; ++i) {
        os << pad(labels[i], rw) << " |";
        for (unsigned j = 0; j < n; ++j) os << ' ' << pad(cells[i][j], cw[j]);
        os << '\n';
    }
    // trim trailing spaces per line for byte-stable fixtures
    std::string raw = os.str();
    std::string out;
    out.reserve(raw.size());
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t nl = raw.find('\n', pos);
        std::string_view line(raw.data() + pos, nl - pos);
        while (!line.empty() && line.back() == ' ') line.remove_suffix(1);
        out.append(line);
        out.push_back('\n');
        pos = nl + 1;
    }
    return out;
}

}  // namespace ihopf
