import init, { simulate_trajectory, dressed_series, wigner_map } from "./pkg/ccars_wasm.js";

const $ = (id) => document.getElementById(id);
const status = $("status");

const sliders = ["omega3", "chirp", "delta", "tau0", "bigdelta"];
const selects = ["mode", "model", "pulse"];

function params() {
  return {
    omega3: parseFloat($("omega3").value),
    chirp: parseFloat($("chirp").value),
    delta: parseFloat($("delta").value),
    tau0: parseFloat($("tau0").value),
    bigdelta: parseFloat($("bigdelta").value),
    mode: $("mode").value,
    model: parseInt($("model").value, 10),
    pulse: $("pulse").value,
  };
}

function showValues() {
  for (const id of sliders) {
    $(id).parentElement.querySelector(".value").textContent = $(id).value;
  }
}

// --- tiny canvas plotting toolkit ------------------------------------------

function frame(ctx, W, H) {
  const m = { l: 52, r: 14, t: 10, b: 30 };
  ctx.clearRect(0, 0, W, H);
  ctx.strokeStyle = "#c7cfd8";
  ctx.strokeRect(m.l, m.t, W - m.l - m.r, H - m.t - m.b);
  return m;
}

function mapper(m, W, H, x0, x1, y0, y1) {
  const sx = (W - m.l - m.r) / (x1 - x0);
  const sy = (H - m.t - m.b) / (y1 - y0);
  return {
    x: (x) => m.l + (x - x0) * sx,
    y: (y) => H - m.b - (y - y0) * sy,
  };
}

function axisLabels(ctx, m, W, H, x0, x1, y0, y1, xlabel) {
  ctx.fillStyle = "#51606f";
  ctx.font = "11px system-ui";
  ctx.textAlign = "center";
  for (let k = 0; k <= 4; k++) {
    const x = x0 + ((x1 - x0) * k) / 4;
    const px = m.l + ((W - m.l - m.r) * k) / 4;
    ctx.fillText(x.toPrecision(3), px, H - m.b + 14);
  }
  ctx.textAlign = "right";
  for (let k = 0; k <= 4; k++) {
    const y = y0 + ((y1 - y0) * k) / 4;
    const py = H - m.b - ((H - m.t - m.b) * k) / 4;
    ctx.fillText(y.toPrecision(2), m.l - 5, py + 4);
  }
  ctx.textAlign = "center";
  ctx.fillText(xlabel, (m.l + W - m.r) / 2, H - 4);
}

function polyline(ctx, map, xs, ys, color, width = 1.6, dash = []) {
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.setLineDash(dash);
  ctx.beginPath();
  for (let i = 0; i < xs.length; i++) {
    const px = map.x(xs[i]);
    const py = map.y(ys[i]);
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  }
  ctx.stroke();
  ctx.setLineDash([]);
}

function legend(ctx, m, entries) {
  ctx.font = "11px system-ui";
  ctx.textAlign = "left";
  let x = m.l + 8;
  for (const [label, color] of entries) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    ctx.moveTo(x, m.t + 10);
    ctx.lineTo(x + 16, m.t + 10);
    ctx.stroke();
    ctx.fillStyle = "#2b3744";
    ctx.fillText(label, x + 20, m.t + 14);
    x += 26 + ctx.measureText(label).width + 14;
  }
}

// Blue -> white -> amber ramp for the Wigner map (signed-looking, but the
// distribution here is non-negative; the ramp just reads well).
function heat(v) {
  const t = Math.max(0, Math.min(1, v));
  const r = Math.round(255 * Math.min(1, 0.1 + 1.4 * t));
  const g = Math.round(255 * Math.min(1, 0.15 + 1.1 * t * t));
  const b = Math.round(255 * Math.max(0, 0.45 - 0.45 * t + 0.55 * (1 - t) * (1 - t)));
  return [r, g, b];
}

// --- panels -----------------------------------------------------------------

function drawTrajectory(p) {
  const data = simulate_trajectory(
    p.omega3, p.tau0, p.chirp, p.delta, p.bigdelta, p.mode, p.model, 6000, 8,
  );
  const dim = data[0] | 0;
  const n = data[1] | 0;
  const t = data.subarray(2, 2 + n);
  const pops = [];
  for (let d = 0; d < dim; d++) pops.push(data.subarray(2 + (1 + d) * n, 2 + (2 + d) * n));
  const coh = data.subarray(2 + (1 + dim) * n, 2 + (2 + dim) * n);

  const canvas = $("trajectory");
  const ctx = canvas.getContext("2d");
  const { width: W, height: H } = canvas;
  const m = frame(ctx, W, H);
  const map = mapper(m, W, H, t[0], t[n - 1], 0, 1.02);
  axisLabels(ctx, m, W, H, t[0], t[n - 1], 0, 1.02, "t  [1/ω21]");

  const colors = ["#1f77b4", "#d62728", "#9467bd", "#8c564b"];
  const names = ["ρ11", "ρ22", "ρ33", "ρ44"];
  const entries = [];
  for (let d = 0; d < dim; d++) {
    polyline(ctx, map, t, pops[d], colors[d]);
    entries.push([names[d], colors[d]]);
  }
  polyline(ctx, map, t, coh, "#111111", 2.0, [6, 3]);
  entries.push(["|ρ12|", "#111111"]);
  legend(ctx, m, entries);
  return coh[n - 1];
}

function drawDressed(p) {
  const data = dressed_series(p.omega3, p.tau0, p.chirp, p.delta, p.bigdelta, p.mode, 900);
  const n = data[0] | 0;
  const col = (k) => data.subarray(1 + k * n, 1 + (k + 1) * n);
  const t = col(0), e1 = col(1), e2 = col(2), l1 = col(3), l2 = col(4), thd = col(5);

  let yMax = 1e-12, thMax = 1e-12;
  for (let i = 0; i < n; i++) {
    yMax = Math.max(yMax, Math.abs(l2[i]), Math.abs(e2[i]));
    thMax = Math.max(thMax, Math.abs(thd[i]));
  }
  yMax *= 1.1;
  const thScaled = new Float64Array(n);
  for (let i = 0; i < n; i++) thScaled[i] = (thd[i] / thMax) * 0.85 * yMax;

  const canvas = $("dressed");
  const ctx = canvas.getContext("2d");
  const { width: W, height: H } = canvas;
  const m = frame(ctx, W, H);
  const map = mapper(m, W, H, t[0], t[n - 1], -yMax, yMax);
  axisLabels(ctx, m, W, H, t[0], t[n - 1], -yMax, yMax, "t  [1/ω21]");

  polyline(ctx, map, t, e1, "#9aa7b4", 1.2, [4, 3]);
  polyline(ctx, map, t, e2, "#9aa7b4", 1.2, [4, 3]);
  polyline(ctx, map, t, l1, "#1f77b4", 1.8);
  polyline(ctx, map, t, l2, "#d62728", 1.8);
  polyline(ctx, map, t, thScaled, "#111111", 1.6);
  legend(ctx, m, [
    ["E1, E2 (bare)", "#9aa7b4"],
    ["λ1", "#1f77b4"],
    ["λ2", "#d62728"],
    [`θ̇ (× ${(0.85 * yMax / thMax).toExponential(1)})`, "#111111"],
  ]);
}

function drawWigner(p) {
  const tau = p.tau0 * Math.sqrt(1 + p.chirp * p.chirp);
  const alphaS = p.chirp / (p.tau0 * p.tau0 * (1 + p.chirp * p.chirp));
  const omegaQ = { pump: 4.0, stokes: 3.0, probe: 4.0 }[p.pulse];
  const nt = 240, nw = 160;
  const data = wigner_map(p.pulse, omegaQ, tau, alphaS, 2.5 * tau, p.mode, nt, nw);
  const [NT, NW, tMin, tMax, wMin, wMax] = data;
  const values = data.subarray(6);

  let vMax = 1e-300;
  for (const v of values) vMax = Math.max(vMax, v);

  const canvas = $("wigner");
  const ctx = canvas.getContext("2d");
  const { width: W, height: H } = canvas;
  const m = frame(ctx, W, H);
  const innerW = W - m.l - m.r, innerH = H - m.t - m.b;

  const img = ctx.createImageData(innerW, innerH);
  for (let py = 0; py < innerH; py++) {
    const iw = Math.min(NW - 1, Math.round(((innerH - 1 - py) / (innerH - 1)) * (NW - 1)));
    for (let px = 0; px < innerW; px++) {
      const it = Math.min(NT - 1, Math.round((px / (innerW - 1)) * (NT - 1)));
      const v = values[it * NW + iw] / vMax;
      const [r, g, b] = heat(Math.pow(v, 0.5));
      const o = 4 * (py * innerW + px);
      img.data[o] = r; img.data[o + 1] = g; img.data[o + 2] = b; img.data[o + 3] = 255;
    }
  }
  ctx.putImageData(img, m.l, m.t);
  ctx.strokeStyle = "#c7cfd8";
  ctx.strokeRect(m.l, m.t, innerW, innerH);
  axisLabels(ctx, m, W, H, tMin, tMax, wMin, wMax, "t  [1/ω21]   (vertical: ω [ω21])");
}

// --- wiring -----------------------------------------------------------------

let pending = null;
function redraw() {
  showValues();
  if (pending) cancelAnimationFrame(pending);
  pending = requestAnimationFrame(() => {
    pending = null;
    const p = params();
    try {
      const t0 = performance.now();
      const finalCoh = drawTrajectory(p);
      drawDressed(p);
      drawWigner(p);
      const ms = (performance.now() - t0).toFixed(0);
      status.textContent =
        `final |ρ12| = ${finalCoh.toFixed(4)} (max 0.5) — computed in ${ms} ms`;
      status.style.color = "#2b6a2f";
    } catch (e) {
      status.textContent = `error: ${e}`;
      status.style.color = "#a33";
    }
  });
}

init().then(() => {
  for (const id of [...sliders, ...selects]) $(id).addEventListener("input", redraw);
  redraw();
}).catch((e) => {
  status.textContent =
    `could not load ./pkg/ccars_wasm.js — build it with ./build.sh first (${e})`;
  status.style.color = "#a33";
});
