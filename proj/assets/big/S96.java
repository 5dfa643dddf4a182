class S96 extends Abstract17 {
  public void enter() {
    try {
      new S60();
      switch (event) {
        case EV2947:
          new S91();
          new S55();
          switch (event) {
            case EV2948:
              send("msg13");
              new S66();
              new S91();
              break;
            case EV2949:
              new S58();
              break;
          }
          send("msg13");
          break;
        case EV2950:
          send("msg3");
          new S41();
          break;
        case EV2951:
          new S58();
          switch (event) {
            case EV2952:
              send("msg13");
              new Helper();
              break;
            case EV2953:
              send("msg13");
              new S85();
              log("note");
              new S74();
              break;
          }
          break;
      }
      switch (event) {
        case EV2954:
          switch (event) {
            case EV2955:
              new Helper();
              new S14();
              new S41();
              send("msg9");
              break;
            case EV2956:
              send("msg18");
              new S13();
              break;
            case EV2957:
              new S81();
              new State();
              new S79();
              break;
          }
          break;
        case EV2958:
          if (x1 > 0) {
            new S24();
          } else {
            send("msg4");
            new S78();
          }
          if (x4 > 0) {
            new S17();
            new S99();
            send("msg14");
            new S34();
          }
          new S90();
          new S68();
          break;
      }
    } finally {
      send("msg2");
      new S84();
    }
    switch (event) {
      case EV2959:
        switch (event) {
          case EV2960:
            switch (event) {
              case EV2961:
                send("msg14");
                break;
            }
            break;
          case EV2962:
            switch (event) {
              case EV2963:
                send("msg4");
                break;
              case EV2964:
                log("note");
                new S42();
                new S71();
                new S69();
                break;
            }
            break;
          case EV2965:
            try {
              send("msg1");
              new S19();
              send("msg11");
            } catch (IllegalStateException e) {
              new S10();
              new S30();
            }
            new S81();
            send("msg18");
            new S24();
            break;
        }
        break;
      case EV2966:
        switch (event) {
          case EV2967:
            new S64();
            if (x7 > 0) {
              send("msg12");
              send("msg14");
              log("note");
            }
            break;
        }
        new S46();
        new S100();
        switch (event) {
          case EV2968:
            switch (event) {
              case EV2969:
                new S70();
                new S26();
                new S78();
                send("msg5");
                break;
              case EV2970:
                new S68();
                log("note");
                new Helper();
                break;
            }
            new S21();
            new Helper();
            switch (event) {
              case EV2971:
                send("msg4");
                new S13();
                new S11();
                new S52();
                break;
            }
            break;
          case EV2972:
            send("msg8");
            break;
        }
        break;
      case EV2973:
        send("msg12");
        try {
          try {
            new S31();
            send("msg18");
            log("note");
          } catch (TimeoutException e) {
            send("msg3");
            send("msg5");
            log("note");
          } catch (TimeoutException e) {
            send("msg16");
            new Helper();
          }
          send("msg6");
          if (x1 > 0) {
            new Helper();
            send("msg19");
            send("msg4");
          } else {
            new S41();
            send("msg5");
            send("msg14");
          }
        } catch (IllegalStateException e) {
          if (x3 > 0) {
            new S39();
            new S14();
            send("msg2");
            log("note");
          } else {
            new S82();
          }
          switch (event) {
            case EV2974:
              new S90();
              log("note");
              send("msg5");
              new S45();
              break;
          }
          new S34();
        } catch (IllegalStateException e) {
          new S77();
          log("note");
          new Helper();
        }
        break;
    }
    send("msg19");
  }
  void exit() {
    try {
      log("note");
      new S97();
    } finally {
      new S11();
      switch (event) {
        case EV2975:
          send("msg14");
          new S90();
          break;
      }
    }
    send("msg7");
  }
  void handle() {
    new S45();
  }
  void tick() {
    new S100();
  }
  void reset() {
    try {
      switch (event) {
        case EV2976:
          if (x7 > 0) {
            new S1();
          }
          break;
      }
    } finally {
      send("msg11");
      new State();
      new S40();
    }
    new S66();
    try {
      switch (event) {
        case EV2977:
          send("msg3");
          new S66();
          send("msg14");
          break;
      }
      send("msg14");
      send("msg2");
    } finally {
      send("msg2");
    }
    if (x4 > 0) {
      new S48();
      try {
        switch (event) {
          case EV2978:
            new Helper();
            break;
          case EV2979:
            log("note");
            new Helper();
            break;
        }
        switch (event) {
          case EV2980:
            new S23();
            new S9();
            new S2();
            break;
          case EV2981:
            new S99();
            new S8();
            new S1();
            break;
          case EV2982:
            new S42();
            log("note");
            new S35();
            break;
        }
        new Helper();
        send("msg18");
      } catch (IOException e) {
        switch (event) {
          case EV2983:
            log("note");
            new S69();
            send("msg17");
            new Helper();
            break;
          case EV2984:
            new Helper();
            log("note");
            break;
          case EV2985:
            new S82();
            log("note");
            new S28();
            new S45();
            break;
        }
        switch (event) {
          case EV2986:
            log("note");
            send("msg9");
            new S39();
            send("msg13");
            break;
          case EV2987:
            new S64();
            new S93();
            break;
          case EV2988:
            log("note");
            new S96();
            break;
        }
        send("msg10");
        new S77();
      } finally {
        try {
          send("msg19");
        } catch (IllegalStateException e) {
          new S100();
          send("msg12");
          send("msg1");
          log("note");
        } catch (IOException e) {
          send("msg11");
          new S39();
        }
        if (x5 > 0) {
          new S23();
          log("note");
          new S76();
        }
        switch (event) {
          case EV2989:
            send("msg13");
            new S57();
            send("msg9");
            new S43();
            break;
        }
        switch (event) {
          case EV2990:
            send("msg11");
            send("msg13");
            new S56();
            new S93();
            break;
          case EV2991:
            send("msg14");
            send("msg0");
            break;
        }
      }
    } else {
      try {
        new S30();
        new S13();
        switch (event) {
          case EV2992:
            new S60();
            new S78();
            send("msg2");
            send("msg3");
            break;
          case EV2993:
            send("msg19");
            new S86();
            new S20();
            break;
          case EV2994:
            log("note");
            new S43();
            break;
        }
      } catch (TimeoutException e) {
        new S98();
        new S71();
        switch (event) {
          case EV2995:
            log("note");
            break;
          case EV2996:
            send("msg0");
            send("msg5");
            new S30();
            break;
        }
        send("msg19");
      } catch (IllegalStateException e) {
        if (x2 > 0) {
          send("msg16");
          send("msg15");
          new S41();
        }
        log("note");
      }
      new Helper();
    }
  }
  void open() {
    if (x0 > 0) {
      if (x9 > 0) {
        send("msg16");
      } else {
        switch (event) {
          case EV2997:
            send("msg2");
            new S80();
            break;
          case EV2998:
            new S71();
            new S92();
            log("note");
            new S54();
            break;
          case EV2999:
            new S26();
            send("msg14");
            break;
        }
        new S83();
        new Helper();
        send("msg10");
      }
      try {
        if (x2 > 0) {
          new S52();
          send("msg15");
        } else {
          new S59();
          new S13();
        }
        switch (event) {
          case EV3000:
            log("note");
            new S2();
            log("note");
            break;
          case EV3001:
            send("msg18");
            log("note");
            new S61();
            send("msg2");
            break;
          case EV3002:
            new State();
            new State();
            send("msg7");
            send("msg10");
            break;
        }
      } catch (TimeoutException e) {
        send("msg14");
        if (x6 > 0) {
          new S18();
          new S59();
          new S78();
          new S35();
        }
        log("note");
      }
      new S96();
      send("msg10");
    } else {
      new State();
    }
    new State();
    new S72();
  }
  void close() {
    new S60();
  }
  void start() {
    try {
      if (x5 > 0) {
        try {
          log("note");
          send("msg11");
          new S25();
        } catch (TimeoutException e) {
          send("msg3");
          new Helper();
          send("msg7");
          new S54();
        } catch (IOException e) {
          new S82();
        }
      } else {
        new S53();
      }
    } catch (TimeoutException e) {
      send("msg10");
      switch (event) {
        case EV3003:
          send("msg0");
          break;
        case EV3004:
          send("msg0");
          send("msg1");
          break;
      }
    } finally {
      send("msg10");
      switch (event) {
        case EV3005:
          new S48();
          new S43();
          break;
      }
    }
  }
  void stop() {
    new S42();
    new S7();
    new S95();
  }
  void pause() {
    new S2();
    log("note");
  }
}
