#include "hdg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace hdg {

std::string circle_ref_token(const CircleRef& ref) {
    if (ref.kind == CircleRef::Face) return "face:" + std::to_string(ref.face_least_dart);
    return "float:" + std::to_string(ref.float_curve) + ":" + side_name(ref.float_side);
}

CircleRef parse_circle_ref(const std::string& token, int line) {
    if (token.rfind("face:", 0) == 0) {
        try {
            return CircleRef::face(std::stoi(token.substr(5)));
        } catch (...) {
            throw ParseError(line, 0, "bad face circle ref '" + token + "'");
        }
    }
    if (token.rfind("float:", 0) == 0) {
        size_t second = token.find(':', 6);
        if (second == std::string::npos) throw ParseError(line, 0, "bad float circle ref");
        try {
            int id = std::stoi(token.substr(6, second - 6));
            std::string side = token.substr(second + 1);
            if (side != "L" && side != "R") throw ParseError(line, 0, "bad float side");
            return CircleRef::floating(id, side == "L" ? Side::Left : Side::Right);
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError(line, 0, "bad float circle ref '" + token + "'");
        }
    }
    throw ParseError(line, 0, "unknown circle ref '" + token + "'");
}

std::string serialize(const HeegaardDiagram& d) {
    std::ostringstream os;
    os << "HDG 1\n";
    os << "genus " << d.genus << "\n";
    for (const auto& c : d.curves)
        os << "curve " << c.id << " " << color_name(c.color) << " " << c.generator << "\n";
    for (const auto& x : d.crossings)
        os << "x " << x.id << " " << x.blue_curve << " " << x.blue_pos << " " << x.red_curve << " "
           << x.red_pos << " " << (x.sign > 0 ? "+" : "-") << "\n";
    for (const auto& c : d.curves)
        if (c.floating())
            os << "float " << c.id << " " << c.float_component << " "
               << side_name(Side::Left) << "\n";
    for (const auto& comp : d.components) {
        os << "comp " << comp.id << " genus " << comp.genus << " circles ";
        for (size_t i = 0; i < comp.circles.size(); ++i) {
            if (i) os << ",";
            os << circle_ref_token(comp.circles[i]);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int to_int(const std::string& t, int line, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (...) {
        throw ParseError(line, 0, std::string("expected integer for ") + what + ", got '" + t + "'");
    }
}

}  // namespace

HeegaardDiagram parse_diagram(const std::string& text) {
    HeegaardDiagram d;
    bool saw_header = false, saw_genus = false;
    struct FloatDecl {
        int curve, comp, line;
        Side side;
    };
    std::vector<FloatDecl> floats;
    std::vector<std::pair<int, ComplementComponent>> comps;  // (line, comp)

    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "HDG" || toks[1] != "1")
                throw ParseError(ln, 0, "missing header (expected 'HDG 1')");
            saw_header = true;
            continue;
        }
        const std::string& kw = toks[0];
        if (kw == "genus") {
            if (toks.size() != 2) throw ParseError(ln, 0, "genus takes one value");
            d.genus = to_int(toks[1], ln, "genus");
            if (d.genus < 0) throw ParseError(ln, 0, "genus must be non-negative");
            saw_genus = true;
        } else if (kw == "curve") {
            if (toks.size() != 4) throw ParseError(ln, 0, "curve takes id, color, generator");
            Curve c;
            c.id = to_int(toks[1], ln, "curve id");
            if (toks[2] == "blue")
                c.color = Color::Blue;
            else if (toks[2] == "red")
                c.color = Color::Red;
            else
                throw ParseError(ln, 0, "color must be blue or red");
            c.generator = to_int(toks[3], ln, "generator index");
            if (c.id != int(d.curves.size())) throw ParseError(ln, 0, "curve ids must be dense and ordered");
            d.curves.push_back(std::move(c));
        } else if (kw == "x") {
            if (toks.size() != 7) throw ParseError(ln, 0, "x takes id, blue-id, blue-pos, red-id, red-pos, sign");
            Crossing x;
            x.id = to_int(toks[1], ln, "crossing id");
            x.blue_curve = to_int(toks[2], ln, "blue curve id");
            x.blue_pos = to_int(toks[3], ln, "blue position");
            x.red_curve = to_int(toks[4], ln, "red curve id");
            x.red_pos = to_int(toks[5], ln, "red position");
            if (toks[6] == "+")
                x.sign = +1;
            else if (toks[6] == "-")
                x.sign = -1;
            else
                throw ParseError(ln, 0, "sign must be + or -");
            if (x.id != int(d.crossings.size()))
                throw ParseError(ln, 0, "crossing ids must be dense and ordered");
            d.crossings.push_back(x);
        } else if (kw == "float") {
            if (toks.size() != 4) throw ParseError(ln, 0, "float takes curve id, component id, side hint");
            FloatDecl f;
            f.curve = to_int(toks[1], ln, "float curve id");
            f.comp = to_int(toks[2], ln, "float host component");
            if (toks[3] != "L" && toks[3] != "R") throw ParseError(ln, 0, "side hint must be L or R");
            f.side = toks[3] == "L" ? Side::Left : Side::Right;
            f.line = ln;
            floats.push_back(f);
        } else if (kw == "comp") {
            if (toks.size() != 6 || toks[2] != "genus" || toks[4] != "circles")
                throw ParseError(ln, 0, "comp line is 'comp <id> genus <h> circles <refs>'");
            ComplementComponent c;
            c.id = to_int(toks[1], ln, "component id");
            c.genus = to_int(toks[3], ln, "component genus");
            std::string refs = toks[5];
            size_t start = 0;
            while (start <= refs.size()) {
                size_t comma = refs.find(',', start);
                std::string tok = refs.substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
                if (tok.empty()) throw ParseError(ln, 0, "empty circle ref");
                c.circles.push_back(parse_circle_ref(tok, ln));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (c.id != int(comps.size())) throw ParseError(ln, 0, "component ids must be dense and ordered");
            comps.push_back({ln, std::move(c)});
        } else {
            throw ParseError(ln, 0, "unknown directive '" + kw + "'");
        }
    }
    if (!saw_header) throw ParseError(ln + 1, 0, "missing header");
    if (!saw_genus) throw ParseError(ln + 1, 0, "missing genus line");

    // crossing -> curve sequence reconstruction
    for (const auto& x : d.crossings) {
        for (int side = 0; side < 2; ++side) {
            int cu = side == 0 ? x.blue_curve : x.red_curve;
            int pos = side == 0 ? x.blue_pos : x.red_pos;
            if (cu < 0 || cu >= int(d.curves.size()))
                throw ParseError(0, 0, "crossing " + std::to_string(x.id) + " references unknown curve");
            auto& seq = d.curves[cu].sequence;
            if (pos < 0) throw ParseError(0, 0, "negative slot position");
            if (int(seq.size()) <= pos) seq.resize(pos + 1, -1);
            if (seq[pos] != -1)
                throw ParseError(0, 0, "slot double use on curve " + std::to_string(cu));
            seq[pos] = x.id;
        }
    }
    for (const auto& c : d.curves)
        for (int v : c.sequence)
            if (v < 0)
                throw ParseError(0, 0, "curve " + std::to_string(c.id) + " has a gap in its slots");

    for (const auto& f : floats) {
        if (f.curve < 0 || f.curve >= int(d.curves.size()))
            throw ParseError(f.line, 0, "float references unknown curve");
        if (!d.curves[f.curve].sequence.empty())
            throw ParseError(f.line, 0, "float curve has crossings");
        d.curves[f.curve].float_component = f.comp;
    }

    for (auto& [cl, c] : comps) d.components.push_back(std::move(c));

    // components may be omitted iff the diagram is filling; derive them
    if (d.components.empty()) {
        for (const auto& c : d.curves)
            if (c.floating())
                throw ParseError(0, 0, "floating curves require explicit component lines");
        if (!d.crossings.empty()) {
            for (const auto& t : d.face_traces()) {
                ComplementComponent c;
                c.id = int(d.components.size());
                c.circles.push_back(CircleRef::face(t[0].id));
                d.components.push_back(std::move(c));
            }
        }
    }
    return d;
}

}  // namespace hdg
