#include "actkit/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "actkit/errors.hpp"

namespace actkit {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line;
        line.number = number;
        std::string word;
        while (words >> word) line.tokens.push_back(word);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Index parse_int(const std::string& filename, const Line& line, const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError(filename, line.number, "expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(filename, line.number, "expected an integer, got '" + token + "'");
    if (value < 0 || value > 1000000)
        throw ParseError(filename, line.number, "integer out of range: '" + token + "'");
    return static_cast<Index>(value);
}

// Reads one row of exactly `width` integers from the next line.
Row parse_row(const std::string& filename, const std::vector<Line>& lines, std::size_t& cursor,
              Index width, const std::string& what) {
    if (cursor >= lines.size()) {
        const int last = lines.empty() ? 1 : lines.back().number;
        throw ParseError(filename, last, "unexpected end of file while reading " + what);
    }
    const Line& line = lines[cursor];
    if (static_cast<Index>(line.tokens.size()) != width)
        throw ParseError(filename, line.number,
                         what + " needs " + std::to_string(width) + " integers, got " +
                             std::to_string(line.tokens.size()));
    Row row;
    row.reserve(static_cast<std::size_t>(width));
    for (const std::string& token : line.tokens) row.push_back(parse_int(filename, line, token));
    ++cursor;
    return row;
}

void bind_hom(ParsedFile& file, Row map, const std::string& filename, int at_line) {
    if (file.acts.empty())
        throw ParseError(filename, at_line, "hom appears before any act");
    const ActPtr target = file.acts.back();
    const ActPtr source = file.acts.size() >= 2 ? file.acts[file.acts.size() - 2] : target;
    if (static_cast<Index>(map.size()) != source->size())
        throw ParseError(filename, at_line,
                         "hom map has " + std::to_string(map.size()) + " entries but its source has " +
                             std::to_string(source->size()) + " elements");
    try {
        file.homs.push_back(ActHom::validate(source, target, std::move(map)));
    } catch (const Error& e) {
        throw ParseError(filename, at_line, e.what());
    }
}

nlohmann::ordered_json act_to_json(const RightAct& act) {
    nlohmann::ordered_json out;
    out["size"] = act.size();
    out["action"] = act.action();
    return out;
}

}  // namespace

ParsedFile parse_act_text(const std::string& text, const std::string& filename) {
    const std::vector<Line> lines = tokenize(text);
    ParsedFile file;
    std::size_t cursor = 0;
    while (cursor < lines.size()) {
        const Line& head = lines[cursor];
        const std::string& keyword = head.tokens.front();
        if (keyword == "monoid") {
            if (file.monoid)
                throw ParseError(filename, head.number, "second monoid block");
            if (head.tokens.size() != 3)
                throw ParseError(filename, head.number, "monoid header needs '<size> <identity>'");
            const Index n = parse_int(filename, head, head.tokens[1]);
            const Index identity = parse_int(filename, head, head.tokens[2]);
            ++cursor;
            Grid table;
            table.reserve(static_cast<std::size_t>(n));
            for (Index i = 0; i < n; ++i)
                table.push_back(parse_row(filename, lines, cursor, n,
                                          "monoid row " + std::to_string(i)));
            try {
                file.monoid = make_monoid(std::move(table), identity);
            } catch (const Error& e) {
                throw ParseError(filename, head.number, e.what());
            }
        } else if (keyword == "act") {
            if (!file.monoid)
                throw ParseError(filename, head.number, "act appears before the monoid block");
            if (head.tokens.size() != 2)
                throw ParseError(filename, head.number, "act header needs '<size>'");
            const Index m = parse_int(filename, head, head.tokens[1]);
            ++cursor;
            Grid action;
            action.reserve(static_cast<std::size_t>(m));
            for (Index i = 0; i < m; ++i)
                action.push_back(parse_row(filename, lines, cursor, file.monoid->size(),
                                           "act row " + std::to_string(i)));
            try {
                file.acts.push_back(share(RightAct::validate(file.monoid, std::move(action))));
            } catch (const Error& e) {
                throw ParseError(filename, head.number, e.what());
            }
        } else if (keyword == "hom") {
            if (head.tokens.size() != 1)
                throw ParseError(filename, head.number, "hom header takes no arguments");
            if (file.acts.empty())
                throw ParseError(filename, head.number, "hom appears before any act");
            const Index source_size =
                file.acts.size() >= 2 ? file.acts[file.acts.size() - 2]->size()
                                      : file.acts.back()->size();
            ++cursor;
            Row map = parse_row(filename, lines, cursor, source_size, "hom map");
            bind_hom(file, std::move(map), filename, head.number);
        } else {
            throw ParseError(filename, head.number, "unknown keyword '" + keyword + "'");
        }
    }
    if (!file.monoid)
        throw ParseError(filename, lines.empty() ? 1 : lines.back().number, "missing monoid block");
    return file;
}

ParsedFile parse_act_json(const std::string& text, const std::string& filename) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(filename, 1, std::string("invalid JSON: ") + e.what());
    }
    ParsedFile file;
    try {
        if (!doc.contains("monoid"))
            throw Error("missing 'monoid' object");
        const auto& monoid = doc.at("monoid");
        Grid table = monoid.at("table").get<Grid>();
        const Index identity = monoid.at("identity").get<Index>();
        if (monoid.contains("size") &&
            monoid.at("size").get<Index>() != static_cast<Index>(table.size()))
            throw Error("monoid 'size' disagrees with its table");
        file.monoid = make_monoid(std::move(table), identity);
        for (const auto& act : doc.value("acts", nlohmann::json::array())) {
            Grid action = act.at("action").get<Grid>();
            if (act.contains("size") &&
                act.at("size").get<Index>() != static_cast<Index>(action.size()))
                throw Error("act 'size' disagrees with its action table");
            file.acts.push_back(share(RightAct::validate(file.monoid, std::move(action))));
        }
        for (const auto& hom : doc.value("homs", nlohmann::json::array())) {
            const Index source = hom.at("source").get<Index>();
            const Index target = hom.at("target").get<Index>();
            const Index count = static_cast<Index>(file.acts.size());
            if (source < 0 || source >= count || target < 0 || target >= count)
                throw Error("hom source/target index out of range");
            file.homs.push_back(ActHom::validate(file.acts[static_cast<std::size_t>(source)],
                                                 file.acts[static_cast<std::size_t>(target)],
                                                 hom.at("map").get<Row>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(filename, 1, std::string("invalid JSON shape: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(filename, 1, e.what());
    }
    return file;
}

ParsedFile parse_act_string(const std::string& text, const std::string& filename) {
    for (const char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_act_json(text, filename);
        break;
    }
    return parse_act_text(text, filename);
}

ParsedFile parse_act_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_act_string(buffer.str(), path);
}

std::string emit_monoid_block(const Monoid& monoid) {
    std::ostringstream out;
    out << "monoid " << monoid.size() << ' ' << monoid.identity() << '\n';
    for (Index a = 0; a < monoid.size(); ++a) {
        for (Index b = 0; b < monoid.size(); ++b) {
            if (b) out << ' ';
            out << monoid.mul(a, b);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_act_block(const RightAct& act) {
    std::ostringstream out;
    out << "act " << act.size() << '\n';
    for (Index a = 0; a < act.size(); ++a) {
        for (Index m = 0; m < act.monoid()->size(); ++m) {
            if (m) out << ' ';
            out << act.act(a, m);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_hom_block(const ActHom& hom) {
    std::ostringstream out;
    out << "hom\n";
    if (hom.source().size() == 0) {
        out << '\n';
        return out.str();
    }
    for (Index a = 0; a < hom.source().size(); ++a) {
        if (a) out << ' ';
        out << hom(a);
    }
    out << '\n';
    return out.str();
}

std::string emit_act_text(const ParsedFile& file) {
    if (!file.monoid) throw Error("cannot emit a file without a monoid");
    std::ostringstream out;
    out << emit_monoid_block(*file.monoid);
    for (const ActPtr& act : file.acts) out << emit_act_block(*act);
    for (const ActHom& hom : file.homs) {
        const ActPtr target = file.acts.empty() ? nullptr : file.acts.back();
        const ActPtr source =
            file.acts.size() >= 2 ? file.acts[file.acts.size() - 2] : target;
        if (!target || hom.source() != *source || hom.target() != *target)
            throw Error("hom endpoints do not match the act order required by the text form");
        out << emit_hom_block(hom);
    }
    return out.str();
}

std::string emit_act_json(const ParsedFile& file) {
    if (!file.monoid) throw Error("cannot emit a file without a monoid");
    nlohmann::ordered_json out;
    out["monoid"]["size"] = file.monoid->size();
    out["monoid"]["identity"] = file.monoid->identity();
    out["monoid"]["table"] = file.monoid->table();
    out["acts"] = nlohmann::ordered_json::array();
    for (const ActPtr& act : file.acts) out["acts"].push_back(act_to_json(*act));
    out["homs"] = nlohmann::ordered_json::array();
    for (const ActHom& hom : file.homs) {
        Index source = -1;
        Index target = -1;
        for (std::size_t i = 0; i < file.acts.size(); ++i) {
            if (source < 0 && *file.acts[i] == hom.source()) source = static_cast<Index>(i);
            if (target < 0 && *file.acts[i] == hom.target()) target = static_cast<Index>(i);
        }
        if (source < 0 || target < 0)
            throw Error("hom endpoints are not among the file's acts");
        nlohmann::ordered_json entry;
        entry["source"] = source;
        entry["target"] = target;
        entry["map"] = hom.map();
        out["homs"].push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

std::string emit_hom_act(const HomAct& hom_act) {
    std::ostringstream out;
    out << emit_act_block(*hom_act.underlying());
    const auto& homs = hom_act.homs();
    for (std::size_t i = 0; i < homs.size(); ++i) {
        out << "# homIndex " << i;
        for (const Index v : homs[i].map()) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string emit_tensor_act(const TensorAct& tensor) {
    std::ostringstream out;
    out << emit_act_block(*tensor.underlying());
    const auto& reps = tensor.representatives();
    for (std::size_t i = 0; i < reps.size(); ++i)
        out << "# tensorRep " << i << ' ' << reps[i].first << ' ' << reps[i].second << '\n';
    return out.str();
}

namespace {

void append_map(std::ostringstream& out, const Row& map) {
    out << '[';
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i) out << ',';
        out << map[i];
    }
    out << ']';
}

std::string dashed(const std::string& text) {
    std::string out = text;
    for (char& c : out)
        if (c == ' ' || c == '\t') c = '-';
    return out;
}

}  // namespace

std::string format_witness_ref(const Witness& witness) {
    std::ostringstream out;
    out << witness.kind;
    if (!witness.note.empty()) out << '(' << dashed(witness.note) << ')';
    if (!witness.homs.empty()) {
        out << "{maps=";
        for (std::size_t i = 0; i < witness.homs.size(); ++i) {
            if (i) out << ';';
            append_map(out, witness.homs[i].map());
        }
        out << '}';
    }
    if (!witness.acts.empty()) {
        out << "{sizes=";
        for (std::size_t i = 0; i < witness.acts.size(); ++i) {
            if (i) out << ';';
            out << witness.acts[i]->size();
        }
        out << '}';
    }
    return out.str();
}

std::string format_witness(const Witness& witness) {
    std::ostringstream out;
    out << "witness kind: " << witness.kind << '\n';
    if (!witness.note.empty()) out << "  note: " << witness.note << '\n';
    for (std::size_t i = 0; i < witness.homs.size(); ++i) {
        out << "  map " << i << " (" << witness.homs[i].source().size() << " -> "
            << witness.homs[i].target().size() << "): ";
        append_map(out, witness.homs[i].map());
        out << '\n';
    }
    for (std::size_t i = 0; i < witness.acts.size(); ++i) {
        out << "  act " << i << " (" << witness.acts[i]->size() << " elements):\n";
        const RightAct& act = *witness.acts[i];
        for (Index a = 0; a < act.size(); ++a) {
            out << "    ";
            for (Index m = 0; m < act.monoid()->size(); ++m) {
                if (m) out << ' ';
                out << act.act(a, m);
            }
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace actkit
