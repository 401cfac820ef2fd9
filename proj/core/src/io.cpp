#include "arq/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace arq {

namespace {

struct Statement {
    int line = 0;
    std::vector<std::string> words;
};

std::vector<Statement> tokenize(const std::string& text) {
    std::vector<Statement> out;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string raw = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Statement st;
        st.line = line;
        std::istringstream words(raw);
        std::string w;
        while (words >> w) st.words.push_back(w);
        if (!st.words.empty()) out.push_back(std::move(st));
    }
    return out;
}

int parse_int(const Statement& st, const std::string& word) {
    try {
        std::size_t used = 0;
        int value = std::stoi(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        return value;
    } catch (const std::exception&) {
        throw ParseError(st.line, "expected an integer, got '" + word + "'");
    }
}

// name -> (degree, index within degree)
struct NameTable {
    std::map<std::string, std::pair<int, std::size_t>> entries;

    void add(int line, const std::string& name, int degree, std::size_t index) {
        if (!entries.emplace(name, std::make_pair(degree, index)).second)
            throw ParseError(line, "duplicate basis name '" + name + "'");
    }
    std::pair<int, std::size_t> get(int line, const std::string& name) const {
        auto it = entries.find(name);
        if (it == entries.end()) throw ParseError(line, "unknown basis name '" + name + "'");
        return it->second;
    }
};

struct Record {  // product/action/differential/t statement, names unresolved
    int line = 0;
    std::vector<std::string> args;
};

struct DegreeDecl {
    int line = 0;
    std::vector<std::string> labels;
};

struct RawDocument {
    std::optional<int> version;
    int version_line = 0;
    std::string kind;
    int kind_line = 0;
    std::optional<Field> field;
    int field_line = 0;
    std::optional<Side> side;
    std::optional<int> d;
    std::map<int, DegreeDecl> degrees;
    std::map<int, DegreeDecl> algebra_degrees;
    std::optional<Record> unit;
    std::vector<Record> products, actions, differentials, algebra_differentials, t_records;
};

void expect_args(const Statement& st, std::size_t n) {
    if (st.words.size() != n + 1)
        throw ParseError(st.line, "statement '" + st.words[0] + "' takes " + std::to_string(n) +
                                      " arguments");
}

Record to_record(const Statement& st) {
    Record r;
    r.line = st.line;
    r.args.assign(st.words.begin() + 1, st.words.end());
    return r;
}

void read_degree_line(RawDocument& doc, const Statement& st, bool algebra) {
    if (st.words.size() < 3)
        throw ParseError(st.line, "degree statements need a degree and at least one basis name");
    int degree = parse_int(st, st.words[1]);
    auto& table = algebra ? doc.algebra_degrees : doc.degrees;
    DegreeDecl decl{st.line, {st.words.begin() + 2, st.words.end()}};
    if (!table.emplace(degree, std::move(decl)).second)
        throw ParseError(st.line, "degree " + std::to_string(degree) + " declared twice");
}

RawDocument scan(const std::string& text) {
    RawDocument doc;
    for (const Statement& st : tokenize(text)) {
        const std::string& head = st.words[0];
        if (head == "format") {
            expect_args(st, 1);
            if (doc.version) throw ParseError(st.line, "format declared twice");
            if (st.words[1] != "1")
                throw ParseError(st.line, "unknown format version '" + st.words[1] + "'");
            doc.version = 1;
            doc.version_line = st.line;
            continue;
        }
        if (!doc.version) throw ParseError(st.line, "the document must start with 'format 1'");
        if (head == "kind") {
            expect_args(st, 1);
            if (!doc.kind.empty()) throw ParseError(st.line, "kind declared twice");
            if (st.words[1] != "dga" && st.words[1] != "dg_module" && st.words[1] != "kt_module")
                throw ParseError(st.line, "unknown kind '" + st.words[1] + "'");
            doc.kind = st.words[1];
            doc.kind_line = st.line;
        } else if (head == "field") {
            expect_args(st, 1);
            if (doc.field) throw ParseError(st.line, "field declared twice");
            if (st.words[1] == "Q") {
                doc.field = Field::rationals();
            } else if (st.words[1].rfind("p=", 0) == 0) {
                try {
                    doc.field = Field::prime_field(std::stoull(st.words[1].substr(2)));
                } catch (const std::exception&) {
                    throw ParseError(st.line, "bad field '" + st.words[1] + "'");
                }
            } else {
                throw ParseError(st.line, "field must be 'Q' or 'p=PRIME'");
            }
            doc.field_line = st.line;
        } else if (head == "side") {
            expect_args(st, 1);
            if (doc.side) throw ParseError(st.line, "side declared twice");
            if (st.words[1] == "left")
                doc.side = Side::left;
            else if (st.words[1] == "right")
                doc.side = Side::right;
            else
                throw ParseError(st.line, "side must be 'left' or 'right'");
        } else if (head == "d") {
            expect_args(st, 1);
            if (doc.d) throw ParseError(st.line, "d declared twice");
            doc.d = parse_int(st, st.words[1]);
        } else if (head == "degree") {
            read_degree_line(doc, st, false);
        } else if (head == "algebra_degree") {
            read_degree_line(doc, st, true);
        } else if (head == "unit") {
            expect_args(st, 1);
            if (doc.unit) throw ParseError(st.line, "unit declared twice");
            doc.unit = to_record(st);
        } else if (head == "product") {
            expect_args(st, 4);
            doc.products.push_back(to_record(st));
        } else if (head == "action") {
            expect_args(st, 4);
            doc.actions.push_back(to_record(st));
        } else if (head == "differential") {
            expect_args(st, 3);
            doc.differentials.push_back(to_record(st));
        } else if (head == "algebra_differential") {
            expect_args(st, 3);
            doc.algebra_differentials.push_back(to_record(st));
        } else if (head == "t") {
            expect_args(st, 3);
            doc.t_records.push_back(to_record(st));
        } else {
            throw ParseError(st.line, "unknown statement '" + head + "'");
        }
    }
    if (!doc.version) throw ParseError(1, "the document must start with 'format 1'");
    if (doc.kind.empty()) throw ParseError(doc.version_line, "missing kind statement");
    if (!doc.field) throw ParseError(doc.kind_line, "missing field statement");
    return doc;
}

GradedVectorSpace build_space(const std::map<int, DegreeDecl>& degrees, NameTable& names,
                              int line_for_empty) {
    GradedVectorSpace space;
    if (degrees.empty()) throw ParseError(line_for_empty, "no degrees declared");
    for (const auto& [degree, decl] : degrees) {
        for (std::size_t i = 0; i < decl.labels.size(); ++i)
            names.add(decl.line, decl.labels[i], degree, i);
        space.set_degree(degree, decl.labels);
    }
    return space;
}

Scalar parse_coefficient(const Field& f, const Record& r, const std::string& word) {
    try {
        return Scalar::parse(f, word);
    } catch (const std::exception&) {
        throw ParseError(r.line, "bad coefficient '" + word + "'");
    }
}

BilinearTable build_bilinear(const std::vector<Record>& records, const Field& f,
                             const NameTable& first, const NameTable& second,
                             const GradedVectorSpace& second_space, const char* what) {
    BilinearTable table;
    for (const Record& r : records) {
        auto [p, ia] = first.get(r.line, r.args[0]);
        auto [q, ib] = second.get(r.line, r.args[1]);
        auto [pq, it_] = second.get(r.line, r.args[2]);
        if (pq != p + q)
            throw ParseError(r.line, std::string(what) + " record degrees do not add up");
        auto it = table.find({p, q});
        if (it == table.end()) {
            std::vector<Matrix> blanks;
            std::size_t count = 0;
            for (const auto& [name, at] : first.entries)
                if (at.first == p) ++count;
            blanks.assign(count, Matrix::zero(f, static_cast<std::size_t>(second_space.dim(p + q)),
                                              static_cast<std::size_t>(second_space.dim(q))));
            it = table.emplace(std::make_pair(p, q), std::move(blanks)).first;
        }
        it->second[ia].at(it_, ib) += parse_coefficient(f, r, r.args[3]);
    }
    return table;
}

std::map<int, Matrix> build_degree_maps(const std::vector<Record>& records, const Field& f,
                                        const NameTable& names, const GradedVectorSpace& space,
                                        int shift, const char* what) {
    std::map<int, Matrix> table;
    for (const Record& r : records) {
        auto [g, is_] = names.get(r.line, r.args[0]);
        auto [h, id_] = names.get(r.line, r.args[1]);
        if (h != g + shift)
            throw ParseError(r.line, std::string(what) + " record target sits in the wrong degree");
        auto it = table.find(g);
        if (it == table.end())
            it = table
                     .emplace(g, Matrix::zero(f, static_cast<std::size_t>(space.dim(g + shift)),
                                              static_cast<std::size_t>(space.dim(g))))
                     .first;
        it->second.at(id_, is_) += parse_coefficient(f, r, r.args[2]);
    }
    return table;
}

DgaPtr build_algebra(const RawDocument& doc, const std::map<int, DegreeDecl>& degs) {
    NameTable names;
    GradedVectorSpace space = build_space(degs, names, doc.kind_line);
    if (!doc.unit) throw ParseError(doc.kind_line, "missing unit statement");
    auto [udeg, uidx] = names.get(doc.unit->line, doc.unit->args[0]);
    if (udeg != 0) throw ParseError(doc.unit->line, "the unit must sit in degree 0");
    BilinearTable product = build_bilinear(doc.products, *doc.field, names, names, space, "product");
    const auto& diff_records =
        doc.kind == "dga" ? doc.differentials : doc.algebra_differentials;
    std::map<int, Matrix> differential =
        build_degree_maps(diff_records, *doc.field, names, space, 1, "differential");
    return std::make_shared<FinDga>(*doc.field, std::move(space), uidx, std::move(product),
                                    std::move(differential));
}

std::string field_line(const Field& f) {
    return f.is_rational() ? "field Q" : "field p=" + std::to_string(f.characteristic());
}

// name of basis vector `index` in the given degree
std::string label_at(const GradedVectorSpace& space, int degree, std::size_t index) {
    return space.labels(degree).at(index);
}

void emit_degrees(std::string& out, const GradedVectorSpace& space, const std::string& stmt) {
    for (int g : space.degrees()) {
        out += stmt + " " + std::to_string(g);
        for (const auto& name : space.labels(g)) out += " " + name;
        out += "\n";
    }
}

void emit_bilinear(std::string& out, const BilinearTable& table, const GradedVectorSpace& first,
                   const GradedVectorSpace& second, const std::string& stmt) {
    for (const auto& [key, mats] : table) {
        auto [p, q] = key;
        for (std::size_t a = 0; a < mats.size(); ++a)
            for (std::size_t col = 0; col < mats[a].cols(); ++col)
                for (std::size_t row = 0; row < mats[a].rows(); ++row) {
                    const Scalar& c = mats[a].at(row, col);
                    if (c.is_zero()) continue;
                    out += stmt + " " + label_at(first, p, a) + " " + label_at(second, q, col) +
                           " " + label_at(second, p + q, row) + " " + c.str() + "\n";
                }
    }
}

void emit_degree_maps(std::string& out, const std::map<int, Matrix>& table,
                      const GradedVectorSpace& space, int shift, const std::string& stmt) {
    for (const auto& [g, mat] : table)
        for (std::size_t col = 0; col < mat.cols(); ++col)
            for (std::size_t row = 0; row < mat.rows(); ++row) {
                const Scalar& c = mat.at(row, col);
                if (c.is_zero()) continue;
                out += stmt + " " + label_at(space, g, col) + " " + label_at(space, g + shift, row) +
                       " " + c.str() + "\n";
            }
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    RawDocument doc = scan(text);
    InputDocument out;
    out.kind = doc.kind;
    if (doc.kind == "dga") {
        if (!doc.degrees.empty() && !doc.algebra_degrees.empty())
            throw ParseError(doc.kind_line, "a dga document uses only 'degree' statements");
        const auto& degs = doc.degrees.empty() ? doc.algebra_degrees : doc.degrees;
        if (!doc.actions.empty())
            throw ParseError(doc.actions.front().line, "action records need kind dg_module");
        if (!doc.t_records.empty())
            throw ParseError(doc.t_records.front().line, "t records need kind kt_module");
        out.dga = build_algebra(doc, degs);
        return out;
    }
    if (doc.kind == "dg_module") {
        if (!doc.t_records.empty())
            throw ParseError(doc.t_records.front().line, "t records need kind kt_module");
        DgaPtr algebra = build_algebra(doc, doc.algebra_degrees);
        NameTable algebra_names;
        for (int g : algebra->space().degrees()) {
            const auto labels = algebra->space().labels(g);
            for (std::size_t i = 0; i < labels.size(); ++i) algebra_names.add(0, labels[i], g, i);
        }
        NameTable names;
        GradedVectorSpace space = build_space(doc.degrees, names, doc.kind_line);
        if (!doc.side) throw ParseError(doc.kind_line, "missing side statement");
        BilinearTable action =
            build_bilinear(doc.actions, *doc.field, algebra_names, names, space, "action");
        std::map<int, Matrix> differential =
            build_degree_maps(doc.differentials, *doc.field, names, space, 1, "differential");
        out.module = share(DGModule(algebra, *doc.side, std::move(space), std::move(action),
                                    std::move(differential)));
        return out;
    }
    // kt_module
    if (!doc.products.empty())
        throw ParseError(doc.products.front().line, "product records need kind dga or dg_module");
    if (!doc.actions.empty())
        throw ParseError(doc.actions.front().line, "action records need kind dg_module");
    if (!doc.d) throw ParseError(doc.kind_line, "missing d statement");
    if (!doc.field->is_rational())
        throw ParseError(doc.field_line, "kt modules require characteristic zero");
    NameTable names;
    GradedVectorSpace space = build_space(doc.degrees, names, doc.kind_line);
    if (*doc.d < 2) throw ParseError(doc.kind_line, "d must be at least 2");
    std::map<int, Matrix> t =
        build_degree_maps(doc.t_records, *doc.field, names, space, -(*doc.d - 1), "t");
    std::optional<std::map<int, Matrix>> differential;
    if (!doc.differentials.empty())
        differential =
            build_degree_maps(doc.differentials, *doc.field, names, space, 1, "differential");
    try {
        out.kt = GradedKTModule(*doc.field, *doc.d, std::move(space), std::move(t),
                                std::move(differential));
    } catch (const std::invalid_argument& e) {
        throw ParseError(doc.kind_line, e.what());
    }
    return out;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str());
}

std::string serialize(const FinDga& r) {
    std::string out = "format 1\nkind dga\n" + field_line(r.field()) + "\n";
    emit_degrees(out, r.space(), "degree");
    out += "unit " + label_at(r.space(), 0, r.unit_index()) + "\n";
    emit_bilinear(out, r.product(), r.space(), r.space(), "product");
    std::map<int, Matrix> diff;
    for (int g : r.space().degrees())
        if (!r.differential(g).is_zero()) diff.emplace(g, r.differential(g));
    emit_degree_maps(out, diff, r.space(), 1, "differential");
    return out;
}

std::string serialize(const DGModule& m) {
    const FinDga& r = m.algebra();
    std::string out = "format 1\nkind dg_module\n" + field_line(r.field()) + "\n";
    out += std::string("side ") + (m.side() == Side::left ? "left" : "right") + "\n";
    emit_degrees(out, r.space(), "algebra_degree");
    out += "unit " + label_at(r.space(), 0, r.unit_index()) + "\n";
    emit_bilinear(out, r.product(), r.space(), r.space(), "product");
    std::map<int, Matrix> adiff;
    for (int g : r.space().degrees())
        if (!r.differential(g).is_zero()) adiff.emplace(g, r.differential(g));
    emit_degree_maps(out, adiff, r.space(), 1, "algebra_differential");
    emit_degrees(out, m.space(), "degree");
    emit_bilinear(out, m.action(), r.space(), m.space(), "action");
    emit_degree_maps(out, m.differential_table(), m.space(), 1, "differential");
    return out;
}

std::string serialize(const GradedKTModule& m) {
    std::string out = "format 1\nkind kt_module\n" + field_line(m.field()) + "\n";
    out += "d " + std::to_string(m.d()) + "\n";
    emit_degrees(out, m.space(), "degree");
    emit_degree_maps(out, m.t_table(), m.space(), -m.step(), "t");
    if (m.has_differential())
        emit_degree_maps(out, m.differential_table().value(), m.space(), 1, "differential");
    return out;
}

std::string serialize(const InputDocument& doc) {
    if (doc.kind == "dga") return serialize(*doc.dga);
    if (doc.kind == "dg_module") return serialize(*doc.module);
    if (doc.kind == "kt_module") return serialize(*doc.kt);
    throw std::invalid_argument("serialize: unknown document kind '" + doc.kind + "'");
}

std::string Report::render() const {
    std::string out = "command: " + command + "\n";
    for (const auto& line : human) out += line + "\n";
    out += "--- machine ---\nreport 1\ncommand " + command + "\n";
    for (const auto& [key, value] : machine) out += key + " " + value + "\n";
    out += "--- end ---\n";
    return out;
}

Report parse_report(const std::string& text) {
    Report rep;
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        lines.push_back(text.substr(pos, eol - pos));
        pos = eol + 1;
    }
    std::size_t i = 0;
    if (lines.empty() || lines[0].rfind("command: ", 0) != 0)
        throw ParseError(1, "report must start with a command echo");
    rep.command = lines[0].substr(9);
    for (i = 1; i < lines.size() && lines[i] != "--- machine ---"; ++i)
        rep.human.push_back(lines[i]);
    if (i >= lines.size()) throw ParseError(static_cast<int>(i), "missing machine section");
    ++i;
    if (i >= lines.size() || lines[i] != "report 1")
        throw ParseError(static_cast<int>(i + 1), "unknown report version");
    ++i;
    if (i >= lines.size() || lines[i].rfind("command ", 0) != 0)
        throw ParseError(static_cast<int>(i + 1), "machine section must echo the command");
    if (lines[i].substr(8) != rep.command)
        throw ParseError(static_cast<int>(i + 1), "machine section echoes a different command");
    ++i;
    for (; i < lines.size() && lines[i] != "--- end ---"; ++i) {
        std::size_t space = lines[i].find(' ');
        if (space == std::string::npos)
            throw ParseError(static_cast<int>(i + 1), "machine records are 'key value' lines");
        rep.machine.push_back({lines[i].substr(0, space), lines[i].substr(space + 1)});
    }
    if (i >= lines.size()) throw ParseError(static_cast<int>(i), "unterminated machine section");
    return rep;
}

}  // namespace arq
