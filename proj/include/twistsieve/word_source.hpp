#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "twistsieve/generator.hpp"
#include "twistsieve/params.hpp"

namespace twistsieve {

struct StreamExhausted : std::runtime_error {
    StreamExhausted() : std::runtime_error("insufficient stream") {}
};

/// Campaign-facing word producer. Block fills keep the virtual dispatch
/// off the per-word path.
class WordSource {
public:
    virtual ~WordSource() = default;
    virtual void fill(std::span<std::uint32_t> out) = 0;
};

class MtWordSource final : public WordSource {
public:
    MtWordSource(const ParameterizedStatus& params, std::uint32_t seed)
        : gen_(params, seed) {}
    void fill(std::span<std::uint32_t> out) override {
        for (auto& w : out) w = gen_.next_u32();
    }

private:
    Generator gen_;
};

class ConstantWordSource final : public WordSource {
public:
    explicit ConstantWordSource(std::uint32_t word) : word_(word) {}
    void fill(std::span<std::uint32_t> out) override {
        for (auto& w : out) w = word_;
    }

private:
    std::uint32_t word_;
};

// Maximal-period 16-bit Galois LFSR (taps 0xB400); each output word packs
// two successive states, so the word sequence repeats every 65535 words.
class Lfsr16WordSource final : public WordSource {
public:
    explicit Lfsr16WordSource(std::uint32_t seed) {
        state_ = static_cast<std::uint16_t>(seed ^ (seed >> 16));
        if (state_ == 0) state_ = 0xACE1;
    }
    void fill(std::span<std::uint32_t> out) override {
        for (auto& w : out) {
            std::uint32_t lo = step();
            std::uint32_t hi = step();
            w = lo | (hi << 16);
        }
    }

private:
    std::uint16_t step() {
        state_ = static_cast<std::uint16_t>(
            (state_ >> 1) ^ (-(state_ & 1u) & 0xB400u));
        return state_;
    }
    std::uint16_t state_;
};

std::unique_ptr<WordSource> make_word_source(const ParameterizedStatus& params,
                                             std::uint32_t seed);

/// Adapter giving the statistical tests a cheap next_u32() over any
/// WordSource.
class BufferedStream {
public:
    explicit BufferedStream(WordSource& src) : src_(&src) {}
    std::uint32_t next_u32() {
        if (pos_ == len_) {
            src_->fill(buf_);
            len_ = buf_.size();
            pos_ = 0;
        }
        return buf_[pos_++];
    }

private:
    WordSource* src_;
    std::array<std::uint32_t, 4096> buf_{};
    std::size_t pos_ = 0;
    std::size_t len_ = 0;
};

/// Finite stream over a vector; throws StreamExhausted at the end.
class VectorStream {
public:
    explicit VectorStream(std::vector<std::uint32_t> words)
        : words_(std::move(words)) {}
    std::uint32_t next_u32() {
        if (pos_ == words_.size()) throw StreamExhausted{};
        return words_[pos_++];
    }

private:
    std::vector<std::uint32_t> words_;
    std::size_t pos_ = 0;
};

// splitmix64 step; the counter-based source behind Random Spacing seeds.
std::uint64_t splitmix64(std::uint64_t x);

// j-th 32-bit seed drawn from counter source `source`.
std::uint32_t derive_seed(std::uint64_t source, std::uint32_t j);

}  // namespace twistsieve
