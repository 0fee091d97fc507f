#pragma once

#include <png.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "image.hpp"

namespace wavefuse {

namespace detail {

// Reads the next PGM header token, skipping whitespace and '#' comments.
inline std::string pnm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
                tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    throw io_error("unsupported/corrupt format: truncated PGM header");
}

inline std::size_t pnm_number(std::istream& in) {
    const std::string tok = pnm_token(in);
    std::size_t value = 0;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw io_error("unsupported/corrupt format: bad PGM header token '" + tok + "'");
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

inline Image load_pgm(std::istream& in, bool binary) {
    const std::size_t width = pnm_number(in);
    const std::size_t height = pnm_number(in);
    const std::size_t maxval = pnm_number(in);
    if (width < 1 || height < 1) throw io_error("unsupported/corrupt format: zero PGM dimension");
    if (maxval == 0 || maxval > 255)
        throw io_error("unsupported format: only 8-bit PGM (maxval <= 255) is supported");
    RealMatrix m(height, width);
    if (binary) {
        in.get();  // single whitespace byte after maxval
        std::vector<unsigned char> row(width);
        for (std::size_t r = 0; r < height; ++r) {
            in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(width));
            if (static_cast<std::size_t>(in.gcount()) != width)
                throw io_error("unsupported/corrupt format: truncated PGM pixel data");
            for (std::size_t c = 0; c < width; ++c) m(r, c) = row[c];
        }
    } else {
        for (std::size_t r = 0; r < height; ++r)
            for (std::size_t c = 0; c < width; ++c) {
                const std::size_t v = pnm_number(in);
                if (v > maxval) throw io_error("unsupported/corrupt format: PGM sample exceeds maxval");
                m(r, c) = static_cast<double>(v);
            }
    }
    return Image(std::move(m));
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

inline Image load_png(const std::string& path) {
    PngReader ctx;
    ctx.fp = std::fopen(path.c_str(), "rb");
    if (!ctx.fp) throw io_error("cannot open file: " + path);
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw io_error("png reader allocation failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw io_error("png reader allocation failed");
    if (setjmp(png_jmpbuf(ctx.png))) throw io_error("unsupported/corrupt format: " + path);
    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    const png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
    const png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
    const int color = png_get_color_type(ctx.png, ctx.info);
    const int depth = png_get_bit_depth(ctx.png, ctx.info);
    if (color != PNG_COLOR_TYPE_GRAY)
        throw io_error("color image: convert to 8-bit grayscale before loading (" + path + ")");
    if (depth > 8) throw io_error("unsupported format: only 8-bit grayscale PNG is supported");
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    RealMatrix m(height, width);
    std::vector<unsigned char> row(width);
    for (png_uint_32 r = 0; r < height; ++r) {
        png_read_row(ctx.png, row.data(), nullptr);
        for (png_uint_32 c = 0; c < width; ++c) m(r, c) = row[c];
    }
    png_read_end(ctx.png, nullptr);
    return Image(std::move(m));
}

inline void save_png(const Image& img, const std::string& path) {
    PngWriter ctx;
    ctx.fp = std::fopen(path.c_str(), "wb");
    if (!ctx.fp) throw io_error("cannot write file: " + path);
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) throw io_error("png writer allocation failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) throw io_error("png writer allocation failed");
    if (setjmp(png_jmpbuf(ctx.png))) throw io_error("png write failed: " + path);
    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    std::vector<unsigned char> row(img.width());
    for (std::size_t r = 0; r < img.height(); ++r) {
        for (std::size_t c = 0; c < img.width(); ++c)
            row[c] = static_cast<unsigned char>(quantize_sample(img(r, c)));
        png_write_row(ctx.png, row.data());
    }
    png_write_end(ctx.png, nullptr);
}

inline std::string lower_ext(const std::string& path) {
    std::string ext = std::filesystem::path(path).extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

}  // namespace detail

// Loads an 8-bit grayscale PGM (P2 or P5) or grayscale PNG.
inline Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() == 2 && magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5'))
        return detail::load_pgm(in, magic[1] == '5');
    if (in.gcount() == 2 && magic[0] == '\x89' && magic[1] == 'P') {
        in.close();
        return detail::load_png(path);
    }
    throw io_error("unsupported/corrupt format: " + path);
}

// Writes PGM; samples are clamped to [0,255] and rounded half away from zero.
inline void save_pgm(const Image& img, const std::string& path, bool ascii = false) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write file: " + path);
    out << (ascii ? "P2" : "P5") << "\n" << img.width() << " " << img.height() << "\n255\n";
    if (ascii) {
        for (std::size_t r = 0; r < img.height(); ++r) {
            for (std::size_t c = 0; c < img.width(); ++c)
                out << quantize_sample(img(r, c)) << (c + 1 == img.width() ? "" : " ");
            out << "\n";
        }
    } else {
        std::vector<unsigned char> row(img.width());
        for (std::size_t r = 0; r < img.height(); ++r) {
            for (std::size_t c = 0; c < img.width(); ++c)
                row[c] = static_cast<unsigned char>(quantize_sample(img(r, c)));
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row.size()));
        }
    }
    if (!out) throw io_error("cannot write file: " + path);
}

// Dispatches on extension: .pgm writes binary P5, .png writes grayscale PNG.
inline void save_image(const Image& img, const std::string& path) {
    const std::string ext = detail::lower_ext(path);
    if (ext == ".pgm") {
        save_pgm(img, path, false);
    } else if (ext == ".png") {
        detail::save_png(img, path);
    } else {
        throw io_error("unsupported output format: " + path + " (use .pgm or .png)");
    }
}

}  // namespace wavefuse
