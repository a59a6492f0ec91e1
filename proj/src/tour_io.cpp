#include "leaper/tour_io.hpp"

#include <iomanip>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace leaper {

namespace {

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
    std::istringstream in(line);
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": not an integer: '" + token + "'");
        }
        values.push_back(value);
    }
    return values;
}

void check_dims(long long width, long long height) {
    if (width < 1 || height < 1 || width > 100000 || height > 100000 || width * height > 100000000) {
        throw ParseError("unreasonable board size " + std::to_string(width) + "x" + std::to_string(height));
    }
}

}  // namespace

std::string write_structured(const TourFile& file) {
    std::ostringstream out;
    out << file.p << ' ' << file.q << ' ' << file.width << ' ' << file.height << '\n';
    for (Cell c : file.tour.cells) out << c.x << ' ' << c.y << '\n';
    return out.str();
}

TourFile read_structured(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError("empty tour file");
    const auto header = parse_ints(line, line_no);
    if (header.size() != 4) throw ParseError("header must be 'p q width height'");
    check_dims(header[2], header[3]);
    TourFile file{static_cast<int>(header[0]), static_cast<int>(header[1]), static_cast<int>(header[2]),
                  static_cast<int>(header[3]), {}};
    const auto expected = static_cast<std::size_t>(file.width) * file.height;
    file.tour.cells.reserve(expected);
    while (std::getline(in, line)) {
        ++line_no;
        const auto xy = parse_ints(line, line_no);
        if (xy.empty() && in.peek() == std::char_traits<char>::eof()) break;
        if (xy.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'");
        file.tour.cells.push_back({static_cast<int>(xy[0]), static_cast<int>(xy[1])});
    }
    if (file.tour.cells.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " cells, found " +
                         std::to_string(file.tour.cells.size()));
    }
    return file;
}

std::string write_json(const TourFile& file) {
    nlohmann::json cells = nlohmann::json::array();
    for (Cell c : file.tour.cells) cells.push_back({c.x, c.y});
    const nlohmann::json doc{{"p", file.p},         {"q", file.q},   {"width", file.width},
                             {"height", file.height}, {"tour", cells}};
    return doc.dump() + "\n";
}

TourFile read_json(std::istream& in) {
    try {
        const auto doc = nlohmann::json::parse(in);
        TourFile file{doc.at("p").get<int>(), doc.at("q").get<int>(), doc.at("width").get<int>(),
                      doc.at("height").get<int>(), {}};
        check_dims(file.width, file.height);
        for (const auto& c : doc.at("tour")) {
            if (!c.is_array() || c.size() != 2) throw ParseError("tour entries must be [x, y]");
            file.tour.cells.push_back({c[0].get<int>(), c[1].get<int>()});
        }
        return file;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("bad JSON tour: ") + err.what());
    }
}

std::string write_grid(const Tour& tour, int width, int height) {
    std::vector<std::size_t> number(static_cast<std::size_t>(width) * height, 0);
    for (std::size_t i = 0; i < tour.cells.size(); ++i) {
        const Cell c = tour.cells[i];
        number[static_cast<std::size_t>(c.y) * width + c.x] = i + 1;
    }
    const int field = static_cast<int>(std::to_string(number.size()).size());
    std::ostringstream out;
    for (int y = height - 1; y >= 0; --y) {
        for (int x = 0; x < width; ++x) {
            if (x) out << ' ';
            out << std::setw(field) << number[static_cast<std::size_t>(y) * width + x];
        }
        out << '\n';
    }
    return out.str();
}

Tour read_grid(std::istream& in, int& width, int& height) {
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto values = parse_ints(line, line_no);
        if (values.empty()) continue;
        if (!rows.empty() && values.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(line_no) + ": ragged grid row");
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw ParseError("empty grid");
    check_dims(static_cast<long long>(rows.front().size()), static_cast<long long>(rows.size()));
    width = static_cast<int>(rows.front().size());
    height = static_cast<int>(rows.size());
    const auto total = static_cast<std::size_t>(width) * height;
    std::vector<Cell> cells(total, Cell{-1, -1});
    for (int row = 0; row < height; ++row) {
        const int y = height - 1 - row;
        for (int x = 0; x < width; ++x) {
            const long long k = rows[row][x];
            if (k < 1 || static_cast<std::size_t>(k) > total) {
                throw ParseError("grid number " + std::to_string(k) + " out of range");
            }
            if (cells[k - 1].x >= 0) throw ParseError("grid number " + std::to_string(k) + " repeated");
            cells[k - 1] = {x, y};
        }
    }
    return Tour{std::move(cells)};
}

std::string write_svg(const Tour& tour, int width, int height) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
        << "\" width=\"" << 20 * width << "\" height=\"" << 20 * height << "\">\n";
    out << "<g stroke=\"#dddddd\" stroke-width=\"0.02\">\n";
    for (int x = 0; x <= width; ++x) out << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << height << "\"/>\n";
    for (int y = 0; y <= height; ++y) out << "<line x1=\"0\" y1=\"" << y << "\" x2=\"" << width << "\" y2=\"" << y << "\"/>\n";
    out << "</g>\n";
    // SVG y grows downward; board y grows upward.
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.06\" stroke-linejoin=\"round\" points=\"";
    const std::size_t n = tour.cells.size();
    for (std::size_t i = 0; i <= n && n > 0; ++i) {
        const Cell c = tour.cells[i % n];
        if (i) out << ' ';
        out << c.x << ".5," << (height - 1 - c.y) << ".5";
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

}  // namespace leaper
