package com.vuzelike.disk2.impl;

import com.vuzelike.disk2.DiskManagerReadRequest;

public class DiskReadRequestImpl implements DiskManagerReadRequest {

    private int pieceIndex;
    private int startByte;
    private int byteCount;
    private long createdAt;
    private boolean dropped;

    public int getPieceNumber() {
        return pieceIndex;
    }

    public int getOffset() {
        return startByte;
    }

    public int getLength() {
        return byteCount;
    }

    public long getTimeCreated() {
        return createdAt;
    }

    public void cancel() {
        dropped = true;
    }

    public boolean isCancelled() {
        return dropped;
    }
}
