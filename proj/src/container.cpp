#include "hvlcl/container.hpp"

#include <stdexcept>

namespace hvlcl {

void write_header(const AuxHeader& h, BitVec& out) {
    if (h.ref_rows < 1 || h.ref_rows > 255 || h.ref_cols < 1 || h.ref_cols > 255)
        throw std::invalid_argument("reference region out of header range");
    out.append_uint(static_cast<std::uint64_t>(h.ref_rows), 8);
    out.append_uint(static_cast<std::uint64_t>(h.ref_cols), 8);
    h.table.serialize(out);
    out.append_uint(h.aux_len, 32);
}

AuxHeader read_header(BitReader& in) {
    int r = static_cast<int>(in.read_uint(8));
    int c = static_cast<int>(in.read_uint(8));
    if (r == 0 || c == 0) throw std::runtime_error("invalid header: empty reference region");
    CodeTable table = CodeTable::deserialize(in);
    std::uint32_t aux_len = static_cast<std::uint32_t>(in.read_uint(32));
    return AuxHeader{r, c, table, aux_len};
}

BitVec pack_reference_values(const GrayImage& img, int ref_rows, int ref_cols) {
    if (ref_rows >= img.rows() || ref_cols >= img.cols())
        throw std::invalid_argument("reference region covers entire image");
    BitVec out;
    for (int i = 0; i < ref_rows; ++i)
        for (int j = 0; j < img.cols(); ++j) out.append_uint(img(i, j), 8);
    for (int j = 0; j < ref_cols; ++j)
        for (int i = ref_rows; i < img.rows(); ++i) out.append_uint(img(i, j), 8);
    return out;
}

void unpack_reference_values(BitReader& in, GrayImage& img, int ref_rows, int ref_cols) {
    if (ref_rows >= img.rows() || ref_cols >= img.cols())
        throw std::invalid_argument("reference region covers entire image");
    for (int i = 0; i < ref_rows; ++i)
        for (int j = 0; j < img.cols(); ++j) img(i, j) = static_cast<std::uint8_t>(in.read_uint(8));
    for (int j = 0; j < ref_cols; ++j)
        for (int i = ref_rows; i < img.rows(); ++i)
            img(i, j) = static_cast<std::uint8_t>(in.read_uint(8));
}

}  // namespace hvlcl
