"""CC4: one hidden neuron per sample, weights assigned in a single pass.

With thermometer-coded inputs, a neuron trained on value v with radius r
fires for every value within r of v, because adjacent values differ in one
bit.
"""

from unary_ecc import encode_thermometer, hidden_activations, predict, train

n = 8
samples = [(encode_thermometer(2, n), 0), (encode_thermometer(6, n), 1)]
net = train(samples, r=1)
for h, w in zip(net.hidden, net.output_weights):
    print(h.weights, "bias", h.bias_weight, "out", w)

for v in range(n + 1):
    x = encode_thermometer(v, n)
    print(v, x, hidden_activations(net, x), predict(net, x))
