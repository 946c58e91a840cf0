#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "voxelnext/common.hpp"
#include "voxelnext/rng.hpp"

namespace vx {

// Dense N-D tensor with an optional gradient buffer. Shared-handle value
// semantics: copies alias the same storage (like the usual tensor libraries),
// clone() deep-copies. Scalar type is a template parameter; training runs in
// float, gradient checking in double.
template <typename T>
class Tensor {
public:
    Tensor() : impl_(std::make_shared<Impl>()) {}

    static Tensor zeros(Shape shape, bool requires_grad = false) {
        Tensor t;
        t.impl_->shape = std::move(shape);
        t.impl_->data.assign(static_cast<size_t>(vx::numel(t.impl_->shape)), T(0));
        t.impl_->requires_grad = requires_grad;
        return t;
    }

    static Tensor full(Shape shape, T value, bool requires_grad = false) {
        Tensor t = zeros(std::move(shape), requires_grad);
        for (auto& v : t.impl_->data) v = value;
        return t;
    }

    static Tensor from_data(Shape shape, std::vector<T> data, bool requires_grad = false) {
        if (vx::numel(shape) != static_cast<int64_t>(data.size()))
            throw ContractError("tensor data length " + std::to_string(data.size()) +
                                " does not match shape " + shape_str(shape));
        Tensor t;
        t.impl_->shape = std::move(shape);
        t.impl_->data = std::move(data);
        t.impl_->requires_grad = requires_grad;
        return t;
    }

    static Tensor scalar(T value, bool requires_grad = false) {
        return from_data({1}, {value}, requires_grad);
    }

    static Tensor randn(Shape shape, Rng& rng, T sd = T(1), bool requires_grad = false) {
        Tensor t = zeros(std::move(shape), requires_grad);
        for (auto& v : t.impl_->data) v = static_cast<T>(rng.normal(0.0, static_cast<double>(sd)));
        return t;
    }

    static Tensor uniform(Shape shape, Rng& rng, T lo, T hi, bool requires_grad = false) {
        Tensor t = zeros(std::move(shape), requires_grad);
        for (auto& v : t.impl_->data) v = static_cast<T>(rng.uniform(lo, hi));
        return t;
    }

    const Shape& shape() const { return impl_->shape; }
    int64_t numel() const { return static_cast<int64_t>(impl_->data.size()); }
    int64_t dim(int i) const { return impl_->shape.at(static_cast<size_t>(i)); }
    int ndim() const { return static_cast<int>(impl_->shape.size()); }

    std::span<T> data() { return impl_->data; }
    std::span<const T> data() const { return impl_->data; }
    T* ptr() { return impl_->data.data(); }
    const T* ptr() const { return impl_->data.data(); }

    T item() const {
        if (numel() != 1) throw ContractError("item() on non-scalar tensor " + shape_str(shape()));
        return impl_->data[0];
    }

    bool requires_grad() const { return impl_->requires_grad; }
    void set_requires_grad(bool v) { impl_->requires_grad = v; }

    bool has_grad() const { return !impl_->grad.empty(); }
    // Allocates the gradient buffer (zeros) on first use.
    std::span<T> grad() {
        if (impl_->grad.empty()) impl_->grad.assign(impl_->data.size(), T(0));
        return impl_->grad;
    }
    std::span<const T> grad_view() const { return impl_->grad; }
    void zero_grad() { impl_->grad.clear(); }

    Tensor clone() const {
        Tensor t;
        t.impl_->shape = impl_->shape;
        t.impl_->data = impl_->data;
        t.impl_->requires_grad = impl_->requires_grad;
        return t;
    }

    template <typename U>
    Tensor<U> cast() const {
        std::vector<U> out(impl_->data.size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<U>(impl_->data[i]);
        return Tensor<U>::from_data(impl_->shape, std::move(out), impl_->requires_grad);
    }

    bool same_storage(const Tensor& other) const { return impl_ == other.impl_; }

    bool all_finite() const {
        for (T v : impl_->data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

private:
    struct Impl {
        Shape shape{0};
        std::vector<T> data;
        std::vector<T> grad;
        bool requires_grad = false;
    };
    std::shared_ptr<Impl> impl_;
};

// Integer label volume ([B,D,H,W] or [D,H,W]); not differentiable.
struct IntTensor {
    Shape shape{0};
    std::vector<int32_t> data;

    IntTensor() = default;
    IntTensor(Shape s, int32_t fill = 0)
        : shape(std::move(s)), data(static_cast<size_t>(vx::numel(shape)), fill) {}

    int64_t numel() const { return static_cast<int64_t>(data.size()); }
    int64_t dim(int i) const { return shape.at(static_cast<size_t>(i)); }

    bool operator==(const IntTensor& o) const { return shape == o.shape && data == o.data; }
};

// Reverse-mode tape. Ops append a backward closure per recorded node; backward
// replays them in reverse recording order, which fixes the gradient
// accumulation order (determinism contract). The graph is implicit in the
// closures' captured tensors and is freed by clear().
template <typename T>
class Tape {
public:
    bool recording() const { return enabled_; }
    void set_enabled(bool v) { enabled_ = v; }

    void record(std::function<void()> backward_fn) {
        nodes_.push_back(std::move(backward_fn));
    }

    size_t size() const { return nodes_.size(); }

    // Seeds d(loss)/d(loss)=1 and runs every node's backward in reverse order.
    // The tape is cleared afterwards.
    void backward(Tensor<T> loss) {
        if (loss.numel() != 1) throw ContractError("backward requires a scalar loss, got " + shape_str(loss.shape()));
        if (!loss.requires_grad()) throw StructuralError("loss does not require grad; nothing to differentiate");
        loss.grad()[0] += T(1);
        for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) (*it)();
        clear();
    }

    void clear() { nodes_.clear(); }

private:
    std::vector<std::function<void()>> nodes_;
    bool enabled_ = true;
};

// Accumulate helper shared by op backwards.
template <typename T>
inline void accumulate(Tensor<T>& t, std::span<const T> contribution) {
    auto g = t.grad();
    for (size_t i = 0; i < g.size(); ++i) g[i] += contribution[i];
}

}  // namespace vx
