#pragma once

#include <chrono>
#include <thread>

namespace rtchan {

/// Injectable time source; the only blocking point in the transmitter.
class Clock {
public:
    virtual ~Clock() = default;
    virtual double now() const = 0;  ///< seconds since session start
    virtual void sleep(double seconds) = 0;
};

/// Simulation clock: sleep advances time by exactly the requested amount.
class VirtualClock final : public Clock {
public:
    double now() const override { return now_s_; }
    void sleep(double seconds) override { now_s_ += seconds; }

private:
    double now_s_ = 0.0;
};

/// Wall clock, for transmitting with real waits.
class SteadyClock final : public Clock {
public:
    SteadyClock() : start_(std::chrono::steady_clock::now()) {}

    double now() const override {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void sleep(double seconds) override {
        if (seconds > 0.0) {
            std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
        }
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace rtchan
