#pragma once

#include "hvlcl/bits.hpp"
#include "hvlcl/cipher.hpp"
#include "hvlcl/code_table.hpp"
#include "hvlcl/codec.hpp"
#include "hvlcl/container.hpp"
#include "hvlcl/image.hpp"
#include "hvlcl/metrics.hpp"
#include "hvlcl/prediction.hpp"
