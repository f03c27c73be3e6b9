#include <pmshape/io.hpp>

#include <pmshape/error.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace pmshape::io {

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string_view next_token(std::string_view& s) noexcept {
    s = trim(s);
    std::size_t end = 0;
    while (end < s.size() && !is_space(s[end])) ++end;
    const auto token = s.substr(0, end);
    s.remove_prefix(end);
    return token;
}

bool parse_double(std::string_view token, double& out) noexcept {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    return in;
}

// Whitespace-separated PGM header/body tokens; '#' starts a comment to end of line.
class PgmTokens {
public:
    explicit PgmTokens(std::istream& in) : in_(in) {}

    std::string next() {
        std::string token;
        int ch;
        while ((ch = in_.get()) != EOF) {
            const char c = static_cast<char>(ch);
            if (c == '#' && token.empty()) {
                while ((ch = in_.get()) != EOF && ch != '\n') {}
                continue;
            }
            if (is_space(c)) {
                if (!token.empty()) break;
                continue;
            }
            token.push_back(c);
        }
        return token;
    }

    unsigned long number(const char* what) {
        const std::string token = next();
        unsigned long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::Parse, std::string("PGM: bad ") + what);
        return value;
    }

private:
    std::istream& in_;
};

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw Error(ErrorKind::Internal, "number formatting failed");
    return std::string(buf.data(), ptr);
}

ShapeVector read_landmarks(std::istream& in) {
    std::vector<Complex> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest = trim(line);
        if (rest.empty() || rest.front() == '#') continue;
        double x = 0.0;
        double y = 0.0;
        const auto tx = next_token(rest);
        const auto ty = next_token(rest);
        if (!parse_double(tx, x) || !parse_double(ty, y) || !trim(rest).empty())
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(line_no) + ": expected two finite numbers \"x y\"");
        points.emplace_back(x, y);
    }
    if (points.empty()) throw Error(ErrorKind::Parse, "no landmarks found");
    return ShapeVector(std::move(points));
}

ShapeVector read_landmarks(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_landmarks(in);
}

void write_landmarks(std::ostream& out, std::span<const Complex> landmarks) {
    for (const Complex& z : landmarks) out << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
}

GreyImage read_pgm(std::istream& in, double pitch) {
    PgmTokens tokens(in);
    if (tokens.next() != "P2") throw Error(ErrorKind::Parse, "PGM: expected magic P2");
    const auto width = tokens.number("width");
    const auto height = tokens.number("height");
    const auto maxval = tokens.number("maxval");
    if (width == 0 || height == 0) throw Error(ErrorKind::Parse, "PGM: empty image");
    if (maxval == 0 || maxval > 65535) throw Error(ErrorKind::Parse, "PGM: maxval out of range");
    std::vector<double> values(width * height);
    const auto scale = static_cast<double>(maxval);
    for (auto& v : values) {
        const auto raw = tokens.number("pixel value");
        if (raw > maxval) throw Error(ErrorKind::Parse, "PGM: pixel value exceeds maxval");
        v = static_cast<double>(raw) / scale;
    }
    return GreyImage(width, height, std::move(values), pitch);
}

GreyImage read_pgm(const std::filesystem::path& path, double pitch) {
    auto in = open_input(path);
    return read_pgm(in, pitch);
}

void write_pgm(std::ostream& out, const GreyImage& img) {
    out << "P2\n" << img.width() << ' ' << img.height() << "\n255\n";
    std::size_t column = 0;
    for (double v : img.intensities()) {
        const auto level = static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
        out << level << (++column % 16 == 0 ? '\n' : ' ');
    }
    if (column % 16 != 0) out << '\n';
}

void write_pgm(const std::filesystem::path& path, const GreyImage& img) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
    write_pgm(out, img);
}

}  // namespace pmshape::io
