#include "toricsym/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace toricsym {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line l{number, {}};
        for (std::string t; ss >> t;) l.tokens.push_back(t);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

long parse_long(const std::string& t, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + t + "'", line);
    }
    if (used != t.size()) throw ParseError("expected an integer, got '" + t + "'", line);
    return v;
}

Integer parse_integer(const std::string& t, int line) {
    Integer z;
    if (z.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw ParseError("expected an integer, got '" + t + "'", line);
    return z;
}

long expect_header(const std::vector<Line>& lines, std::size_t& pos, const std::string& key, int last_line) {
    if (pos >= lines.size()) throw ParseError("missing '" + key + "' line", last_line);
    const Line& l = lines[pos];
    if (l.tokens.size() != 2 || l.tokens[0] != key) throw ParseError("expected '" + key + " <count>'", l.number);
    long v = parse_long(l.tokens[1], l.number);
    if (v < 0 || (key == "dim" && v == 0)) throw ParseError("'" + key + "' must be positive", l.number);
    ++pos;
    return v;
}

}  // namespace

Fan parse_fan(std::istream& in) {
    auto lines = tokenize(in);
    std::size_t pos = 0;
    const int last = lines.empty() ? 1 : lines.back().number;
    Fan f;
    f.dim = static_cast<std::size_t>(expect_header(lines, pos, "dim", last));
    const long d = expect_header(lines, pos, "rays", last);
    for (long i = 0; i < d; ++i) {
        if (pos >= lines.size()) throw ParseError("expected " + std::to_string(d) + " rays", last);
        const Line& l = lines[pos++];
        if (l.tokens.size() != f.dim)
            throw ParseError("ray needs " + std::to_string(f.dim) + " coordinates", l.number);
        IntVector r;
        for (const auto& t : l.tokens) r.push_back(parse_integer(t, l.number));
        f.rays.push_back(std::move(r));
    }
    if (pos < lines.size()) {
        const long c = expect_header(lines, pos, "cones", last);
        for (long i = 0; i < c; ++i) {
            if (pos >= lines.size()) throw ParseError("expected " + std::to_string(c) + " cones", last);
            const Line& l = lines[pos++];
            Cone cone;
            for (const auto& t : l.tokens) {
                long k = parse_long(t, l.number);
                if (k < 0 || k >= d) throw ParseError("ray index " + t + " out of range", l.number);
                cone.push_back(static_cast<std::size_t>(k));
            }
            std::sort(cone.begin(), cone.end());
            f.max_cones.push_back(std::move(cone));
        }
        if (pos < lines.size()) throw ParseError("unexpected trailing content", lines[pos].number);
    }

    // primitivity and the like are checked before any geometry is attempted
    Fan rays_only{f.dim, f.rays, {{}}};
    auto early = validate_fan(rays_only);
    for (const auto& p : early.problems)
        if (p.rfind("ray ", 0) == 0) throw ValidationError(p);

    if (f.max_cones.empty()) {
        Fan ff = face_fan_from_polytope(f.rays);
        if (ff.rays.size() != f.rays.size())
            throw ValidationError("cones omitted but some rays are not vertices of their convex hull");
        return ff;
    }
    require_valid(f);
    return f;
}

Fan parse_fan_text(const std::string& text) {
    std::istringstream in(text);
    return parse_fan(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Fan parse_fan_file(const std::string& path) {
    std::string text = read_file(path);
    return parse_fan_text(text);
}

Polytope parse_polytope(std::istream& in) {
    auto lines = tokenize(in);
    std::size_t pos = 0;
    const int last = lines.empty() ? 1 : lines.back().number;
    const auto n = static_cast<std::size_t>(expect_header(lines, pos, "dim", last));
    const long m = expect_header(lines, pos, "vertices", last);
    std::vector<RatVector> pts;
    for (long i = 0; i < m; ++i) {
        if (pos >= lines.size()) throw ParseError("expected " + std::to_string(m) + " vertices", last);
        const Line& l = lines[pos++];
        if (l.tokens.size() != n) throw ParseError("vertex needs " + std::to_string(n) + " coordinates", l.number);
        RatVector v;
        for (const auto& t : l.tokens) {
            try {
                v.push_back(parse_rational(t));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), l.number);
            }
        }
        pts.push_back(std::move(v));
    }
    if (pos < lines.size()) throw ParseError("unexpected trailing content", lines[pos].number);
    return Polytope::from_points(n, pts);
}

Polytope parse_polytope_file(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_polytope(in);
}

std::string format_fan(const Fan& f, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        for (std::string l; std::getline(cs, l);) os << "# " << l << "\n";
    }
    os << "dim " << f.dim << "\nrays " << f.rays.size() << "\n";
    for (const auto& r : f.rays) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j].get_str();
        os << "\n";
    }
    os << "cones " << f.max_cones.size() << "\n";
    for (const auto& c : f.max_cones) {
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
        os << "\n";
    }
    return os.str();
}

Fan generate_futaki(long n1, long n2) {
    if (n1 < 1 || n2 < 1) throw ValidationError("futaki parameters must be positive");
    const auto n = static_cast<std::size_t>(n1 + n2 + 1);
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVector(n, Integer(-1)));
    IntVector down(n), up(n);
    for (std::size_t i = static_cast<std::size_t>(n1); i < n; ++i) {
        down[i] = -1;
        up[i] = 1;
    }
    rays.push_back(down);
    rays.push_back(up);
    return face_fan_from_polytope(rays);
}

std::string content_hash(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExternalDataset load_np_dataset(const std::string& dir) {
    ExternalDataset out;
    auto one = [&](const char* file, std::optional<Fan>& slot) {
        std::string path = dir + "/" + file;
        if (!std::ifstream(path)) {
            out.missing.push_back(file);
            return;
        }
        slot = parse_fan_file(path);
    };
    one("np_7fold.fan", out.seven_fold);
    one("np_8fold.fan", out.eight_fold);
    return out;
}

}  // namespace toricsym
