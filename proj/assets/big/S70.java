class S70 extends Abstract15 {
  public void enter() {
    if (x5 > 0) {
      new S69();
      new S62();
      try {
        new S45();
      } catch (IllegalStateException e) {
        send("msg19");
        send("msg17");
        send("msg7");
      } catch (IllegalStateException e) {
        new S91();
        try {
          send("msg10");
          new S74();
        } finally {
          send("msg19");
          new S78();
          log("note");
          new S79();
        }
        send("msg9");
      }
      new S28();
    } else {
      try {
        if (x2 > 0) {
          new S82();
          new S2();
        }
        new S82();
        if (x5 > 0) {
          new S67();
          new S66();
          new Helper();
        } else {
          new S67();
          new S1();
        }
      } catch (IllegalStateException e) {
        new S62();
        send("msg15");
      }
      try {
        new S34();
      } catch (TimeoutException e) {
        new S11();
        send("msg10");
      }
    }
    try {
      new S59();
      new State();
      new S86();
    } catch (IOException e) {
      send("msg8");
      new S12();
      log("note");
    } catch (TimeoutException e) {
      if (x5 > 0) {
        try {
          new S11();
        } catch (IOException e) {
          new S42();
          new State();
        } catch (IllegalStateException e) {
          log("note");
        }
      }
      if (x1 > 0) {
        new S59();
      } else {
        send("msg10");
      }
    }
    switch (event) {
      case EV2118:
        log("note");
        break;
      case EV2119:
        new S45();
        try {
          try {
            new S95();
            new S23();
            send("msg15");
            new S48();
          } catch (TimeoutException e) {
            new S88();
            new S15();
            send("msg4");
          } finally {
            send("msg14");
            new Helper();
            new S62();
          }
          log("note");
        } catch (TimeoutException e) {
          send("msg3");
          log("note");
          new S41();
        } finally {
          send("msg17");
          send("msg2");
        }
        break;
      case EV2120:
        new S3();
        switch (event) {
          case EV2121:
            new S98();
            new S17();
            break;
        }
        break;
    }
    log("note");
  }
  public void exit() {
    new S44();
    if (x0 > 0) {
      new S17();
      try {
        try {
          send("msg8");
          new S15();
          log("note");
          send("msg3");
        } catch (TimeoutException e) {
          new S83();
        }
        new S48();
        switch (event) {
          case EV2122:
            new S88();
            break;
          case EV2123:
            send("msg3");
            new S39();
            send("msg14");
            send("msg16");
            break;
        }
        if (x3 > 0) {
          new S22();
          new S57();
        } else {
          send("msg18");
          log("note");
          new S80();
          log("note");
        }
      } catch (IllegalStateException e) {
        send("msg10");
      } catch (IllegalStateException e) {
        send("msg0");
        new S32();
        send("msg17");
        try {
          send("msg15");
        } catch (IOException e) {
          send("msg16");
          new S57();
        }
      }
      switch (event) {
        case EV2124:
          send("msg17");
          break;
        case EV2125:
          if (x6 > 0) {
            log("note");
            send("msg13");
          } else {
            new S53();
            new S47();
          }
          if (x9 > 0) {
            send("msg6");
            new S42();
          }
          send("msg19");
          break;
      }
      new S86();
    }
  }
  void handle() {
    try {
      if (x8 > 0) {
        new S78();
        switch (event) {
          case EV2126:
            send("msg7");
            new S32();
            break;
        }
        send("msg19");
      } else {
        log("note");
        send("msg14");
      }
      new S91();
    } catch (TimeoutException e) {
      new S91();
      log("note");
      send("msg13");
      new S98();
    } finally {
      send("msg7");
      try {
        new S69();
        new S62();
        log("note");
      } finally {
        try {
          send("msg17");
          new S10();
        } catch (IllegalStateException e) {
          send("msg3");
        } finally {
          new S89();
          new S8();
          new S95();
        }
        new State();
      }
      send("msg6");
    }
    new S25();
    new Helper();
  }
  void tick() {
    try {
      switch (event) {
        case EV2127:
          try {
            new S5();
            send("msg11");
            new S91();
          } catch (IOException e) {
            new S33();
            new S98();
            send("msg18");
          } catch (IOException e) {
            new S78();
            new S3();
          }
          new S100();
          switch (event) {
            case EV2128:
              new Helper();
              break;
          }
          break;
        case EV2129:
          try {
            log("note");
            send("msg14");
            new S80();
          } finally {
            new S30();
            send("msg3");
            new S22();
            new S19();
          }
          if (x3 > 0) {
            new S94();
            new S39();
            log("note");
            new Helper();
          }
          switch (event) {
            case EV2130:
              send("msg14");
              new S56();
              break;
          }
          break;
        case EV2131:
          try {
            new S45();
            send("msg11");
          } finally {
            new S75();
            new S100();
          }
          try {
            new S79();
          } catch (IllegalStateException e) {
            log("note");
          } finally {
            send("msg11");
            send("msg5");
          }
          break;
      }
      new S97();
      new S29();
      send("msg9");
    } finally {
      try {
        send("msg19");
      } catch (IOException e) {
        try {
          log("note");
          log("note");
        } catch (IOException e) {
          new S74();
        } catch (TimeoutException e) {
          log("note");
          new S25();
          send("msg14");
        }
        send("msg3");
        if (x7 > 0) {
          new S33();
          new S80();
          new S35();
        }
      }
      new S13();
    }
  }
  void reset() {
    try {
      if (x3 > 0) {
        switch (event) {
          case EV2132:
            new S86();
            new S87();
            send("msg5");
            break;
        }
      }
      try {
        new S17();
      } finally {
        new S93();
        send("msg12");
      }
    } catch (TimeoutException e) {
      switch (event) {
        case EV2133:
          try {
            send("msg16");
            new S93();
            new S90();
          } catch (IllegalStateException e) {
            new S46();
            new Helper();
            new S63();
          } catch (IllegalStateException e) {
            new S16();
            new S24();
          }
          try {
            new S86();
            new S23();
            send("msg8");
          } catch (IOException e) {
            new S26();
            log("note");
            new S42();
          }
          send("msg7");
          send("msg4");
          break;
        case EV2134:
          switch (event) {
            case EV2135:
              new S55();
              break;
          }
          try {
            send("msg13");
            new S51();
          } catch (TimeoutException e) {
            new S22();
            log("note");
          }
          if (x9 > 0) {
            new S76();
          }
          break;
        case EV2136:
          try {
            send("msg11");
            send("msg10");
            new S97();
          } catch (TimeoutException e) {
            new S76();
            send("msg15");
            send("msg14");
          } catch (TimeoutException e) {
            send("msg14");
            new S44();
            new S68();
            new Helper();
          }
          log("note");
          log("note");
          new S13();
          break;
      }
      new S24();
    } finally {
      send("msg5");
      switch (event) {
        case EV2137:
          if (x0 > 0) {
            new S52();
            new S64();
          }
          switch (event) {
            case EV2138:
              new S28();
              new S42();
              send("msg3");
              break;
          }
          new State();
          break;
        case EV2139:
          new S41();
          send("msg9");
          new S61();
          break;
      }
    }
    switch (event) {
      case EV2140:
        new State();
        send("msg11");
        break;
      case EV2141:
        log("note");
        if (x9 > 0) {
          new S66();
        }
        send("msg17");
        break;
    }
    send("msg1");
    if (x5 > 0) {
      new S47();
    } else {
      new S80();
      new S76();
      try {
        log("note");
        new S91();
      } catch (IllegalStateException e) {
        new Helper();
      } finally {
        switch (event) {
          case EV2142:
            new S74();
            log("note");
            send("msg17");
            new Helper();
            break;
          case EV2143:
            new S93();
            new S78();
            break;
          case EV2144:
            send("msg10");
            new S85();
            break;
        }
        send("msg7");
        send("msg5");
      }
    }
  }
  void open() {
    new S17();
    send("msg9");
    new S82();
  }
  void close() {
    if (x2 > 0) {
      log("note");
      switch (event) {
        case EV2145:
          new S33();
          try {
            send("msg18");
            new S47();
            new S42();
          } catch (IllegalStateException e) {
            new S91();
            new S51();
          } finally {
            send("msg6");
          }
          new S92();
          break;
        case EV2146:
          send("msg0");
          break;
      }
      new S12();
    } else {
      log("note");
      try {
        switch (event) {
          case EV2147:
            new State();
            new S79();
            log("note");
            break;
          case EV2148:
            send("msg8");
            new S47();
            new S84();
            send("msg2");
            break;
          case EV2149:
            new S87();
            new S15();
            break;
        }
      } catch (IOException e) {
        if (x4 > 0) {
          new S91();
        } else {
          new S71();
          send("msg6");
        }
        log("note");
        log("note");
        switch (event) {
          case EV2150:
            new Helper();
            send("msg18");
            send("msg9");
            new S47();
            break;
          case EV2151:
            new S49();
            break;
        }
      }
      new S87();
    }
    send("msg3");
    if (x3 > 0) {
      send("msg3");
      if (x0 > 0) {
        switch (event) {
          case EV2152:
            log("note");
            break;
          case EV2153:
            send("msg3");
            break;
          case EV2154:
            new S51();
            new S52();
            new S59();
            break;
        }
        new S37();
      } else {
        try {
          log("note");
          new S60();
          new S52();
          send("msg2");
        } catch (IllegalStateException e) {
          new S60();
          send("msg6");
        } finally {
          new S65();
          new S31();
        }
        send("msg4");
        new S4();
        new S15();
      }
      new S5();
      new S51();
    } else {
      send("msg14");
      if (x1 > 0) {
        send("msg8");
        send("msg1");
        send("msg17");
        send("msg17");
      }
    }
  }
  void start() {
    new S52();
    switch (event) {
      case EV2155:
        switch (event) {
          case EV2156:
            new S85();
            break;
        }
        new S3();
        send("msg16");
        send("msg6");
        break;
      case EV2157:
        try {
          send("msg11");
        } catch (IOException e) {
          new S16();
          switch (event) {
            case EV2158:
              new S80();
              new S61();
              new S19();
              new S78();
              break;
          }
          send("msg12");
        }
        break;
      case EV2159:
        send("msg11");
        new S51();
        if (x1 > 0) {
          new State();
          try {
            send("msg6");
            log("note");
            new S25();
          } catch (IllegalStateException e) {
            send("msg6");
            new S9();
            new S2();
          } catch (IOException e) {
            log("note");
            new State();
            new Helper();
            new S43();
          }
        }
        switch (event) {
          case EV2160:
            if (x3 > 0) {
              new S29();
              new S36();
              send("msg9");
              new S17();
            }
            send("msg2");
            try {
              send("msg12");
              send("msg10");
            } finally {
              new State();
              new S54();
              send("msg15");
            }
            if (x4 > 0) {
              new S60();
              new State();
              log("note");
            }
            break;
          case EV2161:
            try {
              send("msg8");
              log("note");
              new S40();
            } catch (IOException e) {
              new S3();
              new S58();
              new S61();
            }
            send("msg14");
            send("msg9");
            send("msg3");
            break;
        }
        break;
    }
    new S13();
    if (x5 > 0) {
      send("msg15");
      try {
        if (x6 > 0) {
          send("msg9");
          new Helper();
          send("msg3");
          send("msg17");
        } else {
          new S34();
          new S60();
        }
        switch (event) {
          case EV2162:
            log("note");
            new S23();
            send("msg10");
            break;
        }
        send("msg9");
      } finally {
        if (x3 > 0) {
          new S86();
          new S58();
          send("msg18");
        } else {
          send("msg3");
        }
        new S61();
        try {
          send("msg13");
          new S23();
          new State();
        } finally {
          new S24();
        }
        send("msg16");
      }
    }
  }
  void stop() {
    new S8();
  }
  void pause() {
    switch (event) {
      case EV2163:
        send("msg7");
        new S67();
        break;
    }
    switch (event) {
      case EV2164:
        new S72();
        break;
      case EV2165:
        new S32();
        break;
      case EV2166:
        switch (event) {
          case EV2167:
            send("msg14");
            new S2();
            break;
        }
        break;
    }
    log("note");
  }
}
