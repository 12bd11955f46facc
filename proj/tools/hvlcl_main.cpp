#include <CLI11.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hvlcl/hvlcl.hpp"

namespace fs = std::filesystem;
using namespace hvlcl;

namespace {

// Output files appear atomically: written to a sibling temp file and renamed
// into place on success, so failed runs never leave partial output.
void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    try {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
        out.close();
        fs::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    write_file_atomic(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

std::string code_string(const CodeTable& table, int tag) {
    Codeword cw = table.codeword(tag);
    std::string s;
    for (int b = cw.length - 1; b >= 0; --b) s.push_back((cw.bits >> b) & 1 ? '1' : '0');
    return s;
}

std::string format_capacity_report(const CapacityReport& rep, int rows, int cols) {
    CodeTable table = CodeTable::assign(rep.hist);
    char line[160];
    std::string out = "capacity report\n";
    std::snprintf(line, sizeof line, "image: %dx%d, reference region: %d row(s), %d column(s)\n\n",
                  rows, cols, rep.ref_rows, rep.ref_cols);
    out += line;
    out += "label  distribution   code  capacity(bits)  code-length(bits)  payload(bits)\n";
    std::snprintf(line, sizeof line, "%5d  %12" PRIu64 "  %5s  %14s  %17s  %13s\n", -1,
                  rep.hist.ref_count, "-", "-", "-", "-");
    out += line;
    for (int t = 0; t < 9; ++t) {
        int cap = capacity_of(t);
        int len = table.codeword(t).length;
        std::snprintf(line, sizeof line, "%5d  %12" PRIu64 "  %5s  %14d  %17d  %13d\n", t,
                      rep.hist.counts[t], code_string(table, t).c_str(), cap, len, cap - len);
        out += line;
    }
    std::snprintf(line, sizeof line, "%5s  %12s  %5s  %14" PRIu64 "  %17" PRIu64 "  %13" PRId64 "\n",
                  "total", "-", "-", rep.total_capacity_bits, rep.code_bits,
                  static_cast<std::int64_t>(rep.total_capacity_bits) -
                      static_cast<std::int64_t>(rep.code_bits));
    out += line;
    std::snprintf(line, sizeof line,
                  "\nheader: %" PRIu64
                  " bits (8+8 reference region, 36 code table, 32 aux length)\n"
                  "net payload: %" PRId64 " bits (%.3f bpp)\n",
                  rep.header_bits, rep.net_payload_bits,
                  static_cast<double>(rep.net_payload_bits) /
                      (static_cast<double>(rows) * cols));
    out += line;
    return out;
}

int cmd_owner_encrypt(const std::string& in, const std::string& out, const KeySpec& key,
                      const std::string& report_path) {
    GrayImage img = load_pgm(in);
    OwnerOutput result = owner_encode(img, key);
    write_file_atomic(out, write_pgm(result.image));
    if (!report_path.empty())
        write_text_atomic(report_path, format_capacity_report(result.report, img.rows(), img.cols()));
    std::printf("net payload: %" PRId64 " bits (%.3f bpp)\n", result.report.net_payload_bits,
                static_cast<double>(result.report.net_payload_bits) /
                    static_cast<double>(img.pixel_count()));
    return 0;
}

int cmd_hide(const std::string& in, const std::string& out, const KeySpec& key,
             const std::string& payload_path) {
    std::vector<std::uint8_t> payload_bytes = read_file(payload_path);
    GrayImage img = load_pgm(in);
    BitVec payload = BitVec::from_bytes(payload_bytes, payload_bytes.size() * 8);
    EmbedResult result = hider_embed(img, payload, key);
    write_file_atomic(out, write_pgm(result.image));
    std::printf("payload: %" PRIu64 " bits\nER = %.3f bpp\n", result.report.payload_bits,
                result.report.embedding_rate);
    return 0;
}

int cmd_extract(const std::string& in, const std::string& out, const KeySpec& key) {
    GrayImage img = load_pgm(in);
    BitVec payload = receiver_extract(img, key);
    write_file_atomic(out, payload.bytes());
    std::printf("extracted %zu bits\n", payload.size());
    return 0;
}

int cmd_recover(const std::string& in, const std::string& out, const KeySpec& key,
                const std::string& original_path) {
    GrayImage img = load_pgm(in);
    GrayImage recovered = receiver_recover(img, key);
    write_file_atomic(out, write_pgm(recovered));
    if (!original_path.empty()) {
        GrayImage original = load_pgm(original_path);
        double p = psnr(recovered, original);
        std::string psnr_str = std::isinf(p) ? "+inf" : [&] {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", p);
            return std::string(buf);
        }();
        std::string ssim_str = "n/a";
        if (std::min(recovered.rows(), recovered.cols()) >= 11) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", ssim(recovered, original));
            ssim_str = buf;
        }
        std::printf("PSNR / SSIM: %s / %s\n", psnr_str.c_str(), ssim_str.c_str());
    }
    return 0;
}

int cmd_analyze(const std::string& dir, const std::string& out_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        if (ext == ".pgm") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    struct Row {
        std::string name;
        int rows, cols;
        ImageAnalysis analysis;
    };
    std::vector<Row> rows;
    for (const auto& path : files) {
        try {
            GrayImage img = load_pgm(path);
            rows.push_back(Row{path.filename().string(), img.rows(), img.cols(),
                               analyze_image(img)});
        } catch (const std::exception& e) {
            std::fprintf(stderr, "warning: skipping %s: %s\n", path.string().c_str(), e.what());
        }
    }
    if (rows.empty()) {
        std::fprintf(stderr, "error: no readable PGM images in %s\n", dir.c_str());
        return 2;
    }

    std::string csv =
        "filename,rows,cols,ref_rows,ref_cols,feasible,ref_count,"
        "n0,n1,n2,n3,n4,n5,n6,n7,n8,capacity_bits,code_bits,net_payload_bits,er_bpp\n";
    char line[512];
    for (const auto& row : rows) {
        const CapacityReport& rep = row.analysis.report;
        std::snprintf(line, sizeof line, "%s,%d,%d,%d,%d,%s,%" PRIu64, row.name.c_str(),
                      row.rows, row.cols, rep.ref_rows, rep.ref_cols,
                      row.analysis.feasible ? "yes" : "no", rep.hist.ref_count);
        csv += line;
        for (int t = 0; t < 9; ++t) {
            std::snprintf(line, sizeof line, ",%" PRIu64, rep.hist.counts[t]);
            csv += line;
        }
        std::snprintf(line, sizeof line, ",%" PRIu64 ",%" PRIu64 ",%" PRId64 ",%.3f\n",
                      rep.total_capacity_bits, rep.code_bits, rep.net_payload_bits,
                      row.analysis.er_bpp);
        csv += line;
    }

    auto by_er = [](const Row& a, const Row& b) { return a.analysis.er_bpp < b.analysis.er_bpp; };
    const Row& worst = *std::min_element(rows.begin(), rows.end(), by_er);
    const Row& best = *std::max_element(rows.begin(), rows.end(), by_er);
    double avg = 0;
    for (const auto& row : rows) avg += row.analysis.er_bpp;
    avg /= static_cast<double>(rows.size());
    std::snprintf(line, sizeof line,
                  "BEST,,,,,,,,,,,,,,,,,,,%.3f\nWORST,,,,,,,,,,,,,,,,,,,%.3f\n"
                  "AVERAGE,,,,,,,,,,,,,,,,,,,%.3f\n",
                  best.analysis.er_bpp, worst.analysis.er_bpp, avg);
    csv += line;

    write_text_atomic(out_path, csv);
    std::printf("analyzed %zu image(s); best %.3f / worst %.3f / average %.3f bpp\n", rows.size(),
                best.analysis.er_bpp, worst.analysis.er_bpp, avg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HVLCL reversible data hiding in encrypted images"};
    app.require_subcommand(1);

    std::string input, output, key_e_hex, key_w_hex, report_path, payload_path, original_path,
        dir, csv_out;

    auto* owner = app.add_subcommand("owner-encrypt",
                                     "Label, encrypt and embed the label map (content owner)");
    owner->add_option("input", input, "Input PGM image")->required();
    owner->add_option("output", output, "Output PGM image")->required();
    owner->add_option("--key-e", key_e_hex, "Encryption key (hex)")->required();
    owner->add_option("--report", report_path, "Write a capacity report to this path");

    auto* hide = app.add_subcommand("hide", "Embed a payload file (data hider)");
    hide->add_option("input", input, "Encoded PGM image")->required();
    hide->add_option("output", output, "Output PGM image")->required();
    hide->add_option("--key-w", key_w_hex, "Data hiding key (hex)")->required();
    hide->add_option("--payload", payload_path, "Payload file")->required();

    auto* extract = app.add_subcommand("extract", "Extract the payload (receiver, data key only)");
    extract->add_option("input", input, "Marked PGM image")->required();
    extract->add_option("output", output, "Output payload file")->required();
    extract->add_option("--key-w", key_w_hex, "Data hiding key (hex)")->required();

    auto* recover = app.add_subcommand("recover",
                                       "Recover the original image (receiver, encryption key only)");
    recover->add_option("input", input, "Marked PGM image")->required();
    recover->add_option("output", output, "Output PGM image")->required();
    recover->add_option("--key-e", key_e_hex, "Encryption key (hex)")->required();
    recover->add_option("--original", original_path, "Reference image for PSNR/SSIM");

    auto* analyze = app.add_subcommand("analyze", "Capacity statistics for a directory of PGMs");
    analyze->add_option("dir", dir, "Directory of PGM images")->required();
    analyze->add_option("--out", csv_out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // Keys are validated before any pixel work.
    KeySpec key_e, key_w;
    try {
        if (owner->parsed() || recover->parsed()) key_e = KeySpec::from_hex(key_e_hex);
        if (hide->parsed() || extract->parsed()) key_w = KeySpec::from_hex(key_w_hex);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    try {
        if (owner->parsed()) return cmd_owner_encrypt(input, output, key_e, report_path);
        if (hide->parsed()) return cmd_hide(input, output, key_w, payload_path);
        if (extract->parsed()) return cmd_extract(input, output, key_w);
        if (recover->parsed()) return cmd_recover(input, output, key_e, original_path);
        if (analyze->parsed()) return cmd_analyze(dir, csv_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
