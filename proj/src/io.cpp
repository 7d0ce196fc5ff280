#include "ncg/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ncg::io {

namespace {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
            throw std::invalid_argument("malformed rational literal '" + text + "'");
    Rational r(text);
    r.canonicalize();
    return r;
}

}  // namespace

GaussianRational parse_scalar(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if (text.back() == 'i') {
        // forms: "bi", "-i", "i", "a+bi", "a-bi"
        std::string body = text.substr(0, text.size() - 1);
        // split at the last top-level '+'/'-' that is not the leading sign
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                std::string re = body.substr(0, k);
                std::string im = body.substr(k);
                if (im == "+") im = "1";
                if (im == "-") im = "-1";
                return {parse_rational(re), parse_rational(im)};
            }
        }
        if (body.empty()) return {Rational(0), Rational(1)};
        if (body == "-") return {Rational(0), Rational(-1)};
        return {Rational(0), parse_rational(body)};
    }
    return {parse_rational(text), Rational(0)};
}

std::string format_scalar(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    std::string s;
    if (z.re != 0) s = z.re.get_str();
    std::string im = z.im.get_str();
    if (!s.empty() && im[0] != '-') s += "+";
    return s + im + "i";
}

namespace {

struct LineReader {
    std::istream& in;
    int lineNo = 0;

    /// next non-empty, non-comment line split into fields
    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ss(line);
            fields.clear();
            std::string f;
            while (ss >> f) fields.push_back(f);
            if (!fields.empty()) return true;
        }
        return false;
    }
};

}  // namespace

alg::FiniteAlgebra read_algebra(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string> fields;
    int d = -1;
    std::vector<GaussianRational> unit;
    std::vector<GaussianRational> structure;
    std::optional<ExactMatrix> sigma;
    enum class Section { None, Structure, Automorphism } section = Section::None;
    int autoRow = 0;
    while (reader.next(fields)) {
        const std::string& head = fields[0];
        try {
            if (head == "dimension") {
                if (fields.size() != 2) throw std::invalid_argument("dimension takes one value");
                d = std::stoi(fields[1]);
                if (d < 1) throw std::invalid_argument("dimension must be positive");
                structure.assign(static_cast<std::size_t>(d) * d * d, GaussianRational());
                section = Section::None;
            } else if (head == "unit") {
                if (d < 0) throw std::invalid_argument("dimension must come first");
                if (static_cast<int>(fields.size()) != d + 1)
                    throw std::invalid_argument("unit needs exactly dimension entries");
                unit.clear();
                for (int k = 1; k <= d; ++k) unit.push_back(parse_scalar(fields[k]));
                section = Section::None;
            } else if (head == "structure") {
                if (d < 0) throw std::invalid_argument("dimension must come first");
                section = Section::Structure;
            } else if (head == "automorphism") {
                if (d < 0) throw std::invalid_argument("dimension must come first");
                sigma = ExactMatrix(d, d);
                autoRow = 0;
                section = Section::Automorphism;
            } else if (section == Section::Structure) {
                if (fields.size() != 5)
                    throw std::invalid_argument("structure entries are 'i j k re im'");
                int i = std::stoi(fields[0]), j = std::stoi(fields[1]), k = std::stoi(fields[2]);
                if (i < 1 || i > d || j < 1 || j > d || k < 1 || k > d)
                    throw std::invalid_argument("structure index out of range");
                structure[(static_cast<std::size_t>(i - 1) * d + (j - 1)) * d + (k - 1)] =
                    GaussianRational(parse_rational(fields[3]), parse_rational(fields[4]));
            } else if (section == Section::Automorphism) {
                if (autoRow >= d) throw std::invalid_argument("too many automorphism rows");
                if (static_cast<int>(fields.size()) != d)
                    throw std::invalid_argument("automorphism rows need dimension entries");
                for (int k = 0; k < d; ++k) (*sigma)(autoRow, k) = parse_scalar(fields[k]);
                ++autoRow;
            } else {
                throw std::invalid_argument("unrecognised directive '" + head + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw FileError(e.what(), reader.lineNo);
        }
    }
    if (d < 0) throw FileError("missing dimension", reader.lineNo);
    if (unit.empty()) throw FileError("missing unit", reader.lineNo);
    if (sigma && autoRow != d) throw FileError("incomplete automorphism matrix", reader.lineNo);
    try {
        return alg::FiniteAlgebra(d, std::move(structure), std::move(unit), std::move(sigma));
    } catch (const std::invalid_argument& e) {
        throw FileError(e.what(), reader.lineNo);
    }
}

alg::FiniteAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file: " + path);
    return read_algebra(in);
}

calculus::GradedCalculus read_calculus(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string> fields;
    calculus::GradedCalculus c;
    int degrees = -1;
    std::vector<std::vector<std::vector<GaussianRational>>> dmat, gmat;
    int fillDeg = -1, fillRow = 0;
    enum class Section { None, D, Gram } section = Section::None;
    auto expectedRows = [&](int k, Section s) {
        return s == Section::D ? (k + 1 < degrees ? c.dims[k + 1] : 0) : c.dims[k];
    };
    while (reader.next(fields)) {
        const std::string& head = fields[0];
        try {
            if (head == "degrees") {
                degrees = std::stoi(fields.at(1));
                if (degrees < 1) throw std::invalid_argument("degrees must be positive");
                c.dims.assign(degrees, 0);
                dmat.assign(degrees, {});
                gmat.assign(degrees, {});
                section = Section::None;
            } else if (head == "dim") {
                int k = std::stoi(fields.at(1));
                if (k < 0 || k >= degrees) throw std::invalid_argument("dim degree out of range");
                c.dims[k] = std::stoi(fields.at(2));
                section = Section::None;
            } else if (head == "d") {
                fillDeg = std::stoi(fields.at(1));
                if (fillDeg < 0 || fillDeg >= degrees)
                    throw std::invalid_argument("d degree out of range");
                fillRow = 0;
                section = Section::D;
            } else if (head == "gram") {
                fillDeg = std::stoi(fields.at(1));
                if (fillDeg < 0 || fillDeg >= degrees)
                    throw std::invalid_argument("gram degree out of range");
                fillRow = 0;
                section = Section::Gram;
            } else if (head == "product") {
                section = Section::None;  // tables not used by the hodge pipeline
            } else if (section == Section::D || section == Section::Gram) {
                auto& target = section == Section::D ? dmat[fillDeg] : gmat[fillDeg];
                int cols = c.dims[fillDeg];
                if (static_cast<int>(fields.size()) != cols)
                    throw std::invalid_argument("matrix row has wrong width");
                if (fillRow >= expectedRows(fillDeg, section))
                    throw std::invalid_argument("too many matrix rows");
                std::vector<GaussianRational> row;
                for (const auto& f : fields) row.push_back(parse_scalar(f));
                target.push_back(std::move(row));
                ++fillRow;
            } else {
                throw std::invalid_argument("unrecognised directive '" + head + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw FileError(e.what(), reader.lineNo);
        } catch (const std::out_of_range&) {
            throw FileError("missing field", reader.lineNo);
        }
    }
    if (degrees < 1) throw FileError("missing degrees", reader.lineNo);
    for (int k = 0; k < degrees; ++k) {
        int rows = k + 1 < degrees ? c.dims[k + 1] : 0;
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(rows, c.dims[k]);
        for (int r = 0; r < static_cast<int>(dmat[k].size()); ++r)
            for (int cc = 0; cc < c.dims[k]; ++cc) d(r, cc) = dmat[k][r][cc].toComplex();
        c.d.push_back(d);
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(c.dims[k], c.dims[k]);
        for (int r = 0; r < static_cast<int>(gmat[k].size()); ++r)
            for (int cc = 0; cc < c.dims[k]; ++cc) g(r, cc) = gmat[k][r][cc].toComplex();
        c.gram.push_back(g);
    }
    return calculus::validated(std::move(c));
}

calculus::GradedCalculus read_calculus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open calculus file: " + path);
    return read_calculus(in);
}

hopf::Presentation read_presentation(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string> fields;
    std::vector<hopf::Letter> alphabet;
    std::vector<hopf::Presentation::Rule> rules;
    std::vector<std::string> pendingRules;
    std::vector<int> ruleLines;
    while (reader.next(fields)) {
        if (fields[0] == "alphabet") {
            for (std::size_t k = 1; k < fields.size(); ++k) {
                std::string spec = fields[k];
                int weight = 1;
                auto colon = spec.find(':');
                if (colon != std::string::npos) {
                    weight = std::stoi(spec.substr(colon + 1));
                    spec = spec.substr(0, colon);
                }
                alphabet.push_back({spec, weight, -1});
            }
            // pair stars by name
            for (std::size_t i = 0; i < alphabet.size(); ++i)
                for (std::size_t j = 0; j < alphabet.size(); ++j)
                    if (alphabet[j].name == alphabet[i].name + "*") {
                        alphabet[i].star = static_cast<int>(j);
                        alphabet[j].star = static_cast<int>(i);
                    }
        } else if (fields[0] == "rule") {
            std::string joined;
            for (std::size_t k = 1; k < fields.size(); ++k) {
                if (k > 1) joined += " ";
                joined += fields[k];
            }
            pendingRules.push_back(joined);
            ruleLines.push_back(reader.lineNo);
        } else {
            throw FileError("unrecognised directive '" + fields[0] + "'", reader.lineNo);
        }
    }
    if (alphabet.empty()) throw FileError("missing alphabet", reader.lineNo);
    hopf::Presentation lettersOnly(alphabet, {}, "custom");
    for (std::size_t r = 0; r < pendingRules.size(); ++r) {
        const std::string& text = pendingRules[r];
        auto arrow = text.find("->");
        if (arrow == std::string::npos) throw FileError("rule needs '->'", ruleLines[r]);
        std::string lhsText = text.substr(0, arrow);
        std::string rhsText = text.substr(arrow + 2);
        hopf::NCPoly lhsPoly;
        hopf::NCPoly rhsPoly;
        try {
            lhsPoly = hopf::parse(lhsText, lettersOnly);
            rhsPoly = hopf::parse(rhsText, lettersOnly);
        } catch (const hopf::ParseError& e) {
            throw FileError(std::string("rule parse error: ") + e.what(), ruleLines[r]);
        }
        if (lhsPoly.terms().size() != 1)
            throw FileError("rule left side must be a single word", ruleLines[r]);
        const auto& [word, coeff] = *lhsPoly.terms().begin();
        if (!(coeff == hopf::Laurent(GaussianRational(1))))
            throw FileError("rule left side must have coefficient one", ruleLines[r]);
        rules.push_back({word, rhsPoly});
    }
    try {
        return hopf::Presentation(std::move(alphabet), std::move(rules), "custom");
    } catch (const std::invalid_argument& e) {
        throw FileError(e.what(), reader.lineNo);
    }
}

hopf::Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file: " + path);
    return read_presentation(in);
}

std::string svg_line_chart(const std::vector<std::string>& labels,
                           const std::vector<std::vector<double>>& series, bool logScale,
                           const std::string& title) {
    const int width = 640, height = 420, margin = 56;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
       << title << "</text>\n";
    double lo = 1e300, hi = -1e300;
    std::size_t maxLen = 0;
    for (const auto& s : series)
        for (double v : s) {
            double t = logScale ? std::log10(std::max(v, 1e-300)) : v;
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    for (const auto& s : series) maxLen = std::max(maxLen, s.size());
    if (maxLen < 1 || lo > hi) return os.str() + "</svg>\n";
    if (hi - lo < 1e-12) hi = lo + 1.0;
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    auto xpos = [&](std::size_t i) {
        return margin + (width - 2.0 * margin) * (maxLen == 1 ? 0.5 : double(i) / (maxLen - 1));
    };
    auto ypos = [&](double v) {
        double t = logScale ? std::log10(std::max(v, 1e-300)) : v;
        return height - margin - (height - 2.0 * margin) * (t - lo) / (hi - lo);
    };
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[s % 5] << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series[s].size(); ++i)
            os << xpos(i) << "," << ypos(series[s][i]) << " ";
        os << "\"/>\n";
        if (s < labels.size())
            os << "<text x=\"" << width - margin + 4 << "\" y=\""
               << ypos(series[s].empty() ? lo : series[s].back()) << "\" font-size=\"12\" fill=\""
               << colors[s % 5] << "\">" << labels[s] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ncg::io
