package com.vuzelike.tests;

public interface MockRequest {

    int getPieceNumber();
}
